#include "glink/monomial.hpp"

#include <algorithm>

namespace glink {

namespace {

Exponent checked_exponent(std::int64_t e) {
  if (e < 0) throw AlgebraError("negative exponent");
  if (e > kMaxExponent) throw AlgebraError("exponent overflow: " + std::to_string(e));
  return static_cast<Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) {
    throw AlgebraError("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exp_[i] = checked_exponent(exponents[i]);
    degree_ += exp_[i];
  }
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t index, std::uint32_t power) {
  if (index >= kMaxVars) throw AlgebraError("variable index out of range");
  degree_ -= exp_[index];
  exp_[index] = checked_exponent(power);
  degree_ += exp_[index];
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t{a.exp_[i]} + b.exp_[i];
    if (e > kMaxExponent) throw AlgebraError("exponent overflow in monomial product");
    m.exp_[i] = static_cast<Exponent>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = a.exp_[i] - b.exp_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    m.degree_ += m.exp_[i];
  }
  return m;
}

}  // namespace glink
