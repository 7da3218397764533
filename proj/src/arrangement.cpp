#include "glink/arrangement.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "glink/error.hpp"
#include "glink/linalg.hpp"

namespace glink {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

using PointKey = std::array<std::uint32_t, 4>;

struct PointKeyHash {
  std::size_t operator()(const PointKey& k) const noexcept {
    std::uint64_t h = 0;
    for (auto v : k) h = Rng::mix(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

struct LineKeyHash {
  std::size_t operator()(const std::array<std::uint32_t, 8>& k) const noexcept {
    std::uint64_t h = 0;
    for (auto v : k) h = Rng::mix(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

PointKey key_of(const Point& p) { return {p[0].value, p[1].value, p[2].value, p[3].value}; }

}  // namespace

Plane plane_of(const Polynomial& f) {
  if (f.ring()->nvars() != 4) throw AlgebraError("planes live in a ring with 4 variables");
  Plane p{};
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 1) throw AlgebraError("not a linear form: " + f.to_string());
    for (std::size_t i = 0; i < 4; ++i)
      if (t.mono[i] == 1) p[i] = t.coef;
  }
  return p;
}

Polynomial plane_form(const RingPtr& ring, const Plane& p) {
  return Polynomial::linear_form(ring, std::span<const FieldElement>(p.data(), p.size()));
}

bool plane_contains_point(const PrimeField& field, const Plane& p, const Point& q) {
  FieldElement s = field.zero();
  for (std::size_t i = 0; i < 4; ++i) s = field.add(s, field.mul(p[i], q[i]));
  return s.is_zero();
}

Line::Line(const PrimeField& field, const Plane& u, const Plane& v) : u_(u), v_(v) {
  bool nonzero = false;
  for (int k = 0; k < 6; ++k) {
    int i = kPairs[k][0], j = kPairs[k][1];
    minors_[k] = field.sub(field.mul(u[i], v[j]), field.mul(u[j], v[i]));
    nonzero = nonzero || !minors_[k].is_zero();
  }
  if (!nonzero) throw AlgebraError("dependent planes do not define a line");
  Matrix m{std::vector<FieldElement>(u.begin(), u.end()), std::vector<FieldElement>(v.begin(), v.end())};
  std::size_t row = 0;
  for (std::size_t col = 0; col < 4 && row < 2; ++col) {
    std::size_t piv = row;
    while (piv < 2 && m[piv][col].is_zero()) ++piv;
    if (piv == 2) continue;
    std::swap(m[piv], m[row]);
    FieldElement inv = field.inv(m[row][col]);
    for (auto& x : m[row]) x = field.mul(x, inv);
    for (std::size_t r = 0; r < 2; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      FieldElement c = m[r][col];
      for (std::size_t k = 0; k < 4; ++k) m[r][k] = field.sub(m[r][k], field.mul(c, m[row][k]));
    }
    ++row;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    key_[k] = m[0][k].value;
    key_[4 + k] = m[1][k].value;
  }
}

bool Line::contains(const PrimeField& field, const Point& q) const {
  return plane_contains_point(field, u_, q) && plane_contains_point(field, v_, q);
}

Ideal Line::ideal(const RingPtr& ring) const { return Ideal(ring, {plane_form(ring, u_), plane_form(ring, v_)}); }

bool lines_meet(const PrimeField& field, const Line& a, const Line& b) {
  const auto& p = a.minors();
  const auto& q = b.minors();
  // Laplace expansion of det[u_a; v_a; u_b; v_b] along the first two rows.
  FieldElement s = field.mul(p[0], q[5]);
  s = field.sub(s, field.mul(p[1], q[4]));
  s = field.add(s, field.mul(p[2], q[3]));
  s = field.add(s, field.mul(p[3], q[2]));
  s = field.sub(s, field.mul(p[4], q[1]));
  s = field.add(s, field.mul(p[5], q[0]));
  return s.is_zero();
}

std::optional<Point> meeting_point(const PrimeField& field, const Line& a, const Line& b) {
  Matrix m;
  for (const Plane* p : {&a.u(), &a.v(), &b.u(), &b.v()}) m.emplace_back(p->begin(), p->end());
  auto ker = kernel_basis(m, 4, field);
  if (ker.size() != 1) return std::nullopt;
  return normalize_point(ker[0], field);
}

bool plane_contains_line(const PrimeField& field, const Plane& p, const Line& l) {
  Matrix m{std::vector<FieldElement>(l.u().begin(), l.u().end()),
           std::vector<FieldElement>(l.v().begin(), l.v().end()),
           std::vector<FieldElement>(p.begin(), p.end())};
  return matrix_rank(m, field) == 2;
}

std::vector<Incidence> incidences(const PrimeField& field, const std::vector<Line>& first,
                                  const std::vector<Line>& second) {
  std::unordered_map<PointKey, std::size_t, PointKeyHash> index;
  std::vector<Incidence> out;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (!lines_meet(field, first[i], second[j])) continue;
      auto pt = meeting_point(field, first[i], second[j]);
      if (!pt) throw AlgebraError("a line occurs in both families");
      auto [it, fresh] = index.try_emplace(key_of(*pt), out.size());
      if (fresh) out.push_back({*pt, {}, {}});
      Incidence& inc = out[it->second];
      if (std::find(inc.first.begin(), inc.first.end(), i) == inc.first.end()) inc.first.push_back(i);
      if (std::find(inc.second.begin(), inc.second.end(), j) == inc.second.end()) inc.second.push_back(j);
    }
  }
  for (auto& inc : out) {
    std::sort(inc.first.begin(), inc.first.end());
    std::sort(inc.second.begin(), inc.second.end());
  }
  std::sort(out.begin(), out.end(),
            [](const Incidence& a, const Incidence& b) { return key_of(a.point) < key_of(b.point); });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> duplicate_lines(const std::vector<Line>& lines) {
  std::unordered_map<std::array<std::uint32_t, 8>, std::size_t, LineKeyHash> seen;
  std::vector<std::pair<std::size_t, std::size_t>> dups;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [it, fresh] = seen.try_emplace(lines[i].key(), i);
    if (!fresh) dups.emplace_back(it->second, i);
  }
  return dups;
}

Ideal union_of_lines(const RingPtr& ring, const std::vector<Line>& lines) {
  if (lines.empty()) return Ideal::unit(ring);
  std::vector<Ideal> ideals;
  for (const auto& l : lines) ideals.push_back(l.ideal(ring));
  return intersect_all(ideals);
}

}  // namespace glink
