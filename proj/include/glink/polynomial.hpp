#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glink/ring.hpp"

namespace glink {

struct Term {
  FieldElement coef;
  Monomial mono;
};

/// Polynomial over GF(p): nonzero terms, strictly descending in the ring's order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Trusts the caller: terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, FieldElement c);
  // sum coefs[i] * x_i
  static Polynomial linear_form(RingPtr ring, std::span<const FieldElement> coefs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  FieldElement leading_coef() const { return terms_.front().coef; }

  // Maximal standard degree of a term; -1 for zero.
  int degree() const;
  // Maximal weighted degree of a term.
  std::uint64_t weighted_degree() const;
  // All terms of equal weighted degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  Polynomial monic() const;
  Polynomial scaled(FieldElement c) const;
  Polynomial times_term(FieldElement c, const Monomial& m) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;
  // Exact division by a monomial dividing every term.
  Polynomial divided_by(const Monomial& m) const;

  // Replace variable i by images[i] (polynomials in target ring).
  Polynomial substitute(const RingPtr& target, std::span<const Polynomial> images) const;
  // Move to a ring sharing the same prime: variable i goes to map[i]; map[i] < 0 means the
  // variable is set to zero.
  Polynomial remap(const RingPtr& target, std::span<const int> map) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

// a - c*m*b, the elementary reduction step.
Polynomial sub_mul(const Polynomial& a, FieldElement c, const Monomial& m, const Polynomial& b);

Polynomial product(std::span<const Polynomial> factors, const RingPtr& ring);
Polynomial power(const Polynomial& f, unsigned k);

/// Parses sums of products such as `3*x0^2*x1 + 31999*x2^3`; parentheses, unary minus and
/// `^` on parenthesized groups are accepted as well. Whitespace is ignored.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

}  // namespace glink
