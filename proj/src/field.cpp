#include "glink/field.hpp"

#include <string>

namespace glink {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw AlgebraError("prime must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw AlgebraError("field characteristic " + std::to_string(p) + " is not prime");
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw AlgebraError("division by zero in field");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return {static_cast<std::uint32_t>(t)};
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace glink
