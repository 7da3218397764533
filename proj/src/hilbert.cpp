#include "glink/hilbert.hpp"

#include <algorithm>
#include <map>

namespace glink {

namespace {

using Series = std::vector<std::int64_t>;

void add_into(Series& acc, const Series& s, std::size_t shift) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += s[i];
}

Series multiply(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::size_t support_size(const Monomial& m) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) s += m[i] != 0;
  return s;
}

Series numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.size() == 1 && gens[0].is_one()) return {};  // unit ideal
  // Base case: generators with pairwise disjoint supports give a product.
  bool disjoint = true;
  for (std::size_t i = 0; i < gens.size() && disjoint; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && disjoint; ++j) disjoint = gens[i].coprime(gens[j]);
  }
  if (disjoint) {
    Series r{1};
    for (const auto& g : gens) {
      Series f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = multiply(r, f);
    }
    trim(r);
    return r;
  }
  // Pivot on the variable shared by most non-pure-power generators.
  std::size_t best_var = 0, best_count = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens) count += (g[v] != 0 && support_size(g) > 1);
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  std::vector<Exponent> exps;
  for (const auto& g : gens) {
    if (g[best_var] != 0 && support_size(g) > 1) exps.push_back(g[best_var]);
  }
  std::sort(exps.begin(), exps.end());
  Exponent e = exps[exps.size() / 2];
  Monomial pivot = Monomial::variable(best_var, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(best_var, g[best_var] > e ? g[best_var] - e : 0);
    colon.push_back(q);
  }
  Series r = numerator_rec(std::move(with_pivot));
  add_into(r, numerator_rec(std::move(colon)), e);
  trim(r);
  return r;
}

}  // namespace

std::vector<std::int64_t> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t) {
  return numerator_rec(std::move(gens));
}

std::pair<std::vector<std::int64_t>, std::size_t> reduce_numerator(std::vector<std::int64_t> n) {
  std::size_t k = 0;
  for (;;) {
    trim(n);
    if (n.empty()) return {n, k};
    std::int64_t at_one = 0;
    for (auto c : n) at_one += c;
    if (at_one != 0) return {n, k};
    // synthetic division by (1 - z): q_i = sum_{j<=i} n_j
    std::vector<std::int64_t> q(n.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      run += n[i];
      q[i] = run;
    }
    n = std::move(q);
    ++k;
  }
}

std::vector<std::int64_t> series_coefficients(std::span<const std::int64_t> numerator, std::size_t k,
                                              std::size_t bound) {
  std::vector<std::int64_t> c(bound + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && i <= bound; ++i) c[i] = numerator[i];
  for (std::size_t step = 0; step < k; ++step) {
    for (std::size_t i = 1; i <= bound; ++i) c[i] += c[i - 1];
  }
  return c;
}

}  // namespace glink
