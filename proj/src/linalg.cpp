#include "glink/linalg.hpp"

#include <utility>

namespace glink {

namespace {

void trim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

}  // namespace

UPoly characteristic_polynomial(Matrix h, const PrimeField& F) {
  const std::size_t n = h.size();
  // Hessenberg reduction by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1].is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    FieldElement inv = F.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      FieldElement u = F.mul(h[r][m - 1], inv);
      if (u.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = F.sub(h[r][c], F.mul(u, h[m][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][m] = F.add(h[c][m], F.mul(u, h[c][r]));
    }
  }
  // p_k = characteristic polynomial of the leading k x k block.
  std::vector<UPoly> p(n + 1);
  p[0] = {F.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    // (z - h[k-1][k-1]) * p[k-1]
    UPoly next(k + 1, F.zero());
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      next[i + 1] = F.add(next[i + 1], p[k - 1][i]);
      next[i] = F.sub(next[i], F.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    FieldElement prod = F.one();
    for (std::size_t i = 1; i < k; ++i) {
      prod = F.mul(prod, h[k - i][k - i - 1]);
      FieldElement coef = F.mul(prod, h[k - i - 1][k - 1]);
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) {
        next[j] = F.sub(next[j], F.mul(coef, p[k - i - 1][j]));
      }
    }
    p[k] = std::move(next);
  }
  return p[n];
}

UPoly upoly_derivative(const UPoly& f, const PrimeField& F) {
  UPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), f[i]));
  trim(d);
  return d;
}

UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    FieldElement inv = F.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      FieldElement c = F.mul(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = F.sub(a[i + shift], F.mul(c, b[i]));
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    FieldElement inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

bool upoly_squarefree(const UPoly& f, const PrimeField& F) {
  UPoly g = upoly_gcd(f, upoly_derivative(f, F), F);
  return g.size() == 1;
}

FieldElement upoly_eval(const UPoly& f, FieldElement x, const PrimeField& F) {
  FieldElement r = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t ncols, const PrimeField& F) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t r = row;
    while (r < a.size() && a[r][col].is_zero()) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[row]);
    FieldElement inv = F.inv(a[row][col]);
    for (auto& v : a[row]) v = F.mul(v, inv);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == row || a[k][col].is_zero()) continue;
      FieldElement c = a[k][col];
      for (std::size_t j = 0; j < ncols; ++j) a[k][j] = F.sub(a[k][j], F.mul(c, a[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(Matrix a, const PrimeField& F) {
  if (a.empty()) return 0;
  return rref(a, a[0].size(), F).size();
}

std::vector<std::vector<FieldElement>> kernel_basis(Matrix a, std::size_t ncols, const PrimeField& F) {
  auto pivots = rref(a, ncols, F);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(ncols, F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace glink
