#include <algorithm>
#include <deque>
#include <map>

#include "glink/linalg.hpp"
#include "glink/toolbox.hpp"

namespace glink {

namespace {

// Standard monomials of a zero-dimensional affine ideal, capped at `limit` (+1 to detect
// overflow).
std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& gb, std::size_t nvars,
                                         std::size_t limit) {
  std::vector<Monomial> out;
  std::deque<Monomial> queue{Monomial()};
  std::map<std::array<Exponent, kMaxVars>, bool> seen;
  seen[Monomial().exponents()] = true;
  while (!queue.empty() && out.size() <= limit) {
    Monomial m = queue.front();
    queue.pop_front();
    bool reducible = std::any_of(gb.begin(), gb.end(),
                                 [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    if (reducible) continue;
    out.push_back(m);
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (seen.emplace(next.exponents(), true).second) queue.push_back(next);
    }
  }
  return out;
}

}  // namespace

ReducednessCertificate is_reduced_zero_dim(const Ideal& I, const Rng& rng) {
  if (krull_dim(I) != 1 || I.is_unit()) {
    throw AlgebraError("is_reduced_zero_dim needs a zero-dimensional scheme (dim R/I = 1)");
  }
  ReducednessCertificate cert;
  cert.degree = degree(I);
  const RingPtr& ring = I.ring();
  const auto& field = ring->field();
  const std::size_t n = ring->nvars();
  RingPtr affine = ring->without_variable(n - 1)->with_order(MonomialOrder::degrevlex());

  int squarefree_failures = 0;
  for (std::uint64_t attempt = 0; attempt < 6; ++attempt) {
    Rng r = rng.child(attempt);
    cert.seeds.push_back(r.seed());
    // Hyperplane at infinity: a random linear form sent to the last variable, set to 1.
    Polynomial infinity = random_linear_form(ring, r);
    std::vector<FieldElement> c(n);
    for (const auto& t : infinity.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (t.mono[i] == 1) c[i] = t.coef;
      }
    }
    if (c[n - 1].is_zero()) continue;
    // x_last = (1 - sum_{i<last} c_i y_i) / c_last, x_i = y_i
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(Polynomial::variable(affine, i));
    Polynomial last = Polynomial::constant(affine, 1);
    for (std::size_t i = 0; i + 1 < n; ++i) last = last - images[i].scaled(c[i]);
    images.push_back(last.scaled(field.inv(c[n - 1])));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.substitute(affine, images));
    auto gb = groebner(gens);
    auto basis = standard_monomials(gb, n - 1, static_cast<std::size_t>(cert.degree));
    cert.algebra_dimension = basis.size();
    if (static_cast<std::int64_t>(basis.size()) != cert.degree) continue;  // support at infinity

    std::map<std::array<Exponent, kMaxVars>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
    Polynomial lambda(affine);
    for (std::size_t i = 0; i + 1 < n; ++i) lambda = lambda + images[i].scaled(r.element(field));
    const std::size_t D = basis.size();
    Matrix mult(D, std::vector<FieldElement>(D, field.zero()));
    for (std::size_t j = 0; j < D; ++j) {
      Polynomial prod = lambda * Polynomial::monomial(affine, basis[j], field.one());
      Polynomial nf = normal_form(prod, gb);
      for (const auto& t : nf.terms()) mult[index.at(t.mono.exponents())][j] = t.coef;
    }
    UPoly chi = characteristic_polynomial(std::move(mult), field);
    if (upoly_squarefree(chi, field)) {
      cert.reduced = true;
      return cert;
    }
    // One fresh draw guards against an unlucky separating element.
    if (++squarefree_failures == 2) return cert;
  }
  return cert;
}

Ideal component_at_point(const Ideal& I, const Point& P, const std::vector<Point>& others,
                         const Rng& rng) {
  if (krull_dim(I) != 1) throw AlgebraError("component_at_point needs a zero-dimensional scheme");
  const RingPtr& ring = I.ring();
  const auto& field = ring->field();
  for (const auto& Q : others) {
    if (same_point(P, Q, field)) throw AlgebraError("component_at_point: P listed among the other points");
  }
  std::vector<Polynomial> factors;
  for (std::size_t k = 0; k < others.size(); ++k) {
    Rng r = rng.child(k);
    bool found = false;
    for (int attempt = 0; attempt < 3 && !found; ++attempt) {
      Polynomial l = random_linear_form_through(ring, others[k], r);
      if (!l.evaluate(P).is_zero()) {
        factors.push_back(l);
        found = true;
      }
    }
    if (!found) throw GenericityError("component_at_point: separating form vanishes at P after 3 retries");
  }
  // I : (l_1 ... l_m)^inf, one linear factor at a time.
  Ideal cur = I;
  for (const auto& l : factors) cur = saturate(cur, l);
  return cur;
}

}  // namespace glink
