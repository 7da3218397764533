#pragma once

#include <stdexcept>
#include <string>

namespace glink {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Misuse of an algebraic operation: ring mismatch, division by zero, bad precondition.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A randomized "general" choice kept failing after all retries.
class GenericityError : public Error {
 public:
  using Error::Error;
};

// A construction ran, but one of the properties it must satisfy did not hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// The requested computation exceeds the configured size limits.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace glink
