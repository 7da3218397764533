#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

#include "glink/error.hpp"

namespace glink {

/// Residue class modulo the ring's prime. The prime itself lives in PrimeField.
struct FieldElement {
  std::uint32_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.value; }

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  // Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(FieldElement a) const {
    return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace glink

template <>
struct std::hash<glink::FieldElement> {
  std::size_t operator()(glink::FieldElement a) const noexcept { return a.value; }
};
