#pragma once

// Independent reference computations used only by the tests. Nothing here calls the
// Groebner engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "glink/polynomial.hpp"

namespace glink::oracle {

// All monomials of total degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = static_cast<int>(left);
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = static_cast<int>(k);
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// Row echelon form over GF(p); returns the rank and keeps rows reduced.
class EchelonSpace {
 public:
  EchelonSpace(std::vector<Monomial> basis, const PrimeField& field)
      : basis_(std::move(basis)), field_(field) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[key(basis_[i])] = i;
  }

  std::vector<FieldElement> coords(const Polynomial& f) const {
    std::vector<FieldElement> v(basis_.size(), FieldElement{0});
    for (const auto& t : f.terms()) {
      auto it = index_.find(key(t.mono));
      if (it == index_.end()) return {};
      v[it->second] = t.coef;
    }
    return v;
  }

  // Reduce v by the stored rows; returns true when v was already in the span.
  bool reduce(std::vector<FieldElement>& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      FieldElement c = v[pivot];
      for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = field_.sub(v[k], field_.mul(c, row[k]));
      }
    }
    return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x.is_zero(); });
  }

  void insert(std::vector<FieldElement> v) {
    if (reduce(v)) return;
    std::size_t pivot = 0;
    while (v[pivot].is_zero()) ++pivot;
    FieldElement inv = field_.inv(v[pivot]);
    for (auto& x : v) x = field_.mul(x, inv);
    for (auto& [p, row] : rows_) {
      if (row[pivot].is_zero()) continue;
      FieldElement c = row[pivot];
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = field_.sub(row[k], field_.mul(c, v[k]));
    }
    rows_.emplace_back(pivot, std::move(v));
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return basis_.size(); }

 private:
  static std::vector<Exponent> key(const Monomial& m) {
    return {m.exponents().begin(), m.exponents().end()};
  }

  std::vector<Monomial> basis_;
  const PrimeField& field_;
  std::map<std::vector<Exponent>, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::vector<FieldElement>>> rows_;
};

// Degree-d graded piece of the ideal generated by homogeneous `gens`.
inline EchelonSpace ideal_piece(const std::vector<Polynomial>& gens, const RingPtr& ring, unsigned d) {
  EchelonSpace space(monomials_of_degree(ring->nvars(), d), ring->field());
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), d - static_cast<unsigned>(g.degree()))) {
      space.insert(space.coords(g.times_term(FieldElement{1}, m)));
    }
  }
  return space;
}

// Membership of a homogeneous f by linear algebra in its own degree.
inline bool member_by_linear_algebra(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  auto space = ideal_piece(gens, f.ring(), static_cast<unsigned>(f.degree()));
  auto v = space.coords(f);
  return space.reduce(v);
}

// dim_K (R/I)_d by linear algebra.
inline std::size_t hilbert_function(const std::vector<Polynomial>& gens, const RingPtr& ring, unsigned d) {
  auto space = ideal_piece(gens, ring, d);
  return space.dimension() - space.rank();
}

// Naive term-by-term product, used to check the kernel's multiplication.
inline Polynomial naive_product(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms;
  const auto& field = a.ring()->field();
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) terms.push_back({field.mul(s.coef, t.coef), s.mono * t.mono});
  }
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace glink::oracle
