#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "glink/error.hpp"

namespace glink {

inline constexpr std::size_t kMaxVars = 12;
using Exponent = std::uint16_t;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponent vector with a fixed capacity; unused trailing slots stay zero.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::array<Exponent, kMaxVars>& exponents() const { return exp_; }

  // Degree restricted to variables [begin, end).
  std::uint32_t block_degree(std::size_t begin, std::size_t end) const {
    std::uint32_t d = 0;
    for (std::size_t i = begin; i < end; ++i) d += exp_[i];
    return d;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  // True when the supports are disjoint.
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Precondition: b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  void set(std::size_t index, std::uint32_t power);

  std::size_t hash() const {
    std::size_t h = degree_;
    for (Exponent e : exp_) h = h * 1000003u ^ e;
    return h;
  }

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

}  // namespace glink

template <>
struct std::hash<glink::Monomial> {
  std::size_t operator()(const glink::Monomial& m) const noexcept { return m.hash(); }
};
