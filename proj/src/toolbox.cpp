#include "glink/toolbox.hpp"

#include <algorithm>

#include "glink/hilbert.hpp"

namespace glink {

namespace {

bool fast_linear_path(const Polynomial& f) {
  const PolyRing& ring = *f.ring();
  return f.degree() == 1 && f.is_homogeneous() && ring.standard_grading() &&
         ring.order().kind() == OrderKind::DegRevLex;
}

// Coordinate change sending the linear form f to the last variable, and its inverse.
struct LinearChange {
  std::vector<Polynomial> forward;   // images of old variables in new coordinates
  std::vector<Polynomial> backward;  // images of new variables in old coordinates
};

LinearChange change_to_last(const Polynomial& f) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  const std::size_t n = ring->nvars();
  std::vector<FieldElement> c(n, FieldElement{0});
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] == 1) c[i] = t.coef;
    }
  }
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;) {
    if (!c[i].is_zero()) {
      k = i;
      break;
    }
  }
  if (k == n) throw AlgebraError("linear form is zero");
  const std::size_t last = n - 1;
  LinearChange ch;
  ch.forward.resize(n, Polynomial(ring));
  ch.backward.resize(n, Polynomial(ring));
  for (std::size_t i = 0; i < n; ++i) {
    ch.forward[i] = Polynomial::variable(ring, i);
    ch.backward[i] = Polynomial::variable(ring, i);
  }
  if (k != last) {
    ch.forward[last] = Polynomial::variable(ring, k);
    ch.backward[k] = Polynomial::variable(ring, last);
  }
  Polynomial xk = Polynomial::variable(ring, last);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k || c[i].is_zero()) continue;
    xk = xk - ch.forward[i].scaled(c[i]);
  }
  ch.forward[k] = xk.scaled(field.inv(c[k]));
  ch.backward[last] = f;
  return ch;
}

// Colon by the last variable on a reduced degrevlex basis: divide by x_last once (or as
// often as possible when saturating).
std::vector<Polynomial> colon_last_variable(const std::vector<Polynomial>& gb, bool saturate) {
  std::vector<Polynomial> out;
  out.reserve(gb.size());
  for (const auto& g : gb) {
    const std::size_t last = g.ring()->nvars() - 1;
    Exponent lowest = kMaxExponent;
    for (const auto& t : g.terms()) lowest = std::min(lowest, t.mono[last]);
    if (!saturate) lowest = std::min<Exponent>(lowest, 1);
    out.push_back(lowest == 0 ? g : g.divided_by(Monomial::variable(last, lowest)));
  }
  return out;
}

Ideal linear_colon(const Ideal& I, const Polynomial& f, bool saturate) {
  LinearChange ch = change_to_last(f);
  const RingPtr& ring = I.ring();
  std::vector<Polynomial> moved;
  for (const auto& g : I.generators()) moved.push_back(g.substitute(ring, ch.forward));
  auto gb = groebner(moved);
  auto colon = colon_last_variable(gb, saturate);
  std::vector<Polynomial> back;
  for (const auto& g : colon) back.push_back(g.substitute(ring, ch.backward));
  return Ideal(ring, std::move(back));
}

std::vector<Polynomial> move_to_aux_ring(const std::vector<Polynomial>& polys, const RingPtr& aux) {
  std::vector<int> map(polys.empty() ? 0 : polys[0].ring()->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i) + 1;
  std::vector<Polynomial> out;
  for (const auto& p : polys) out.push_back(p.remap(aux, map));
  return out;
}

}  // namespace

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  require_same_ring(g.ring(), f.ring(), "division");
  if (f.is_zero()) throw AlgebraError("division by zero polynomial");
  const auto& field = g.ring()->field();
  FieldElement inv = field.inv(f.leading_coef());
  Polynomial rest = g;
  std::vector<Term> q;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!f.leading_monomial().divides(lt.mono)) throw AlgebraError("polynomial is not divisible");
    Term t{field.mul(lt.coef, inv), lt.mono / f.leading_monomial()};
    q.push_back(t);
    rest = sub_mul(rest, t.coef, t.mono, f);
  }
  return Polynomial::from_sorted_terms(g.ring(), std::move(q));
}

bool membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal sum");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& extra) {
  auto gens = I.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) {
    for (const auto& g : J.generators()) gens.push_back(f * g);
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal scale_ideal(const Polynomial& f, const Ideal& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "intersection");
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  const RingPtr& ring = I.ring();
  RingPtr aux = ring->with_leading_aux(ring->fresh_name("u"), 0);
  Polynomial u = Polynomial::variable(aux, 0);
  Polynomial one_minus_u = Polynomial::constant(aux, 1) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : move_to_aux_ring(I.groebner_basis(), aux)) gens.push_back(u * f);
  for (const auto& g : move_to_aux_ring(J.groebner_basis(), aux)) gens.push_back(one_minus_u * g);
  auto gb = groebner(gens);
  std::vector<int> back(aux->nvars());
  back[0] = -1;
  for (std::size_t i = 1; i < back.size(); ++i) back[i] = static_cast<int>(i) - 1;
  std::vector<Polynomial> result;
  for (const auto& g : gb) {
    if (g.leading_monomial()[0] == 0) result.push_back(g.remap(ring, back));
  }
  if (ring->order().kind() == OrderKind::DegRevLex) {
    return Ideal::from_reduced_basis(ring, std::move(result));
  }
  return Ideal(ring, std::move(result));
}

Ideal intersect_all(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw AlgebraError("intersection of no ideals");
  Ideal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "quotient");
  if (f.is_zero()) throw AlgebraError("quotient by the zero polynomial");
  if (f.is_constant()) return I;
  if (I.is_unit()) return I;
  if (fast_linear_path(f)) return linear_colon(I, f, false);
  Ideal both = intersect(I, principal(f));
  std::vector<Polynomial> gens;
  for (const auto& g : both.groebner_basis()) gens.push_back(divide_exact(g, f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "quotient");
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::vector<Ideal> parts;
  for (const auto& g : J.groebner_basis()) {
    if (g.is_constant()) return I;
    parts.push_back(quotient(I, g));
    if (parts.back() == I) return I;  // I ⊆ I:J ⊆ I:g
  }
  return intersect_all(parts);
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "saturation");
  if (f.is_zero()) return Ideal::unit(I.ring());
  if (f.is_constant() || I.is_unit()) return I;
  if (fast_linear_path(f)) return linear_colon(I, f, true);
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient(cur, f);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient(cur, J);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

Ideal saturate_irrelevant(const Ideal& I) { return saturate(I, irrelevant_ideal(I.ring())); }

bool is_saturated(const Ideal& I) { return quotient(I, irrelevant_ideal(I.ring())) == I; }

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) {
  const RingPtr& ring = I.ring();
  if (vars.empty()) return I;
  std::vector<bool> drop(ring->nvars(), false);
  for (const auto& v : vars) {
    int idx = ring->index_of(v);
    if (idx < 0) throw AlgebraError("eliminate: unknown variable '" + v + "'");
    drop[static_cast<std::size_t>(idx)] = true;
  }
  std::size_t k = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
  if (k == ring->nvars()) throw AlgebraError("eliminate: cannot eliminate every variable");
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  std::vector<int> to_elim(ring->nvars()), to_final(ring->nvars());
  std::vector<std::string> kept_names;
  std::vector<std::uint32_t> kept_weights;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (drop[i] != (pass == 0)) continue;
      to_elim[i] = static_cast<int>(names.size());
      names.push_back(ring->name(i));
      weights.push_back(ring->weights()[i]);
      if (!drop[i]) {
        to_final[i] = static_cast<int>(kept_names.size());
        kept_names.push_back(ring->name(i));
        kept_weights.push_back(ring->weights()[i]);
      }
    }
  }
  RingPtr elim = PolyRing::make(names, ring->field().prime(), MonomialOrder::elimination(k), weights);
  RingPtr target = PolyRing::make(kept_names, ring->field().prime(), MonomialOrder::degrevlex(), kept_weights);
  std::vector<Polynomial> moved;
  for (const auto& g : I.generators()) moved.push_back(g.remap(elim, to_elim));
  auto gb = groebner(moved);
  std::vector<int> back(elim->nvars(), -1);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (!drop[i]) back[static_cast<std::size_t>(to_elim[i])] = to_final[i];
  }
  std::vector<Polynomial> result;
  for (const auto& g : gb) {
    if (g.leading_monomial().block_degree(0, k) == 0) result.push_back(g.remap(target, back));
  }
  return Ideal::from_reduced_basis(target, std::move(result));
}

std::vector<std::int64_t> hilbert_numerator(const Ideal& I) { return I.hilbert_numerator(); }

std::int64_t hilbert_function(const Ideal& I, std::size_t d) {
  const auto& n = I.hilbert_numerator();
  return series_coefficients(n, I.ring()->nvars(), d)[d];
}

int krull_dim(const Ideal& I) {
  if (I.is_unit()) return 0;
  auto [reduced, k] = reduce_numerator(I.hilbert_numerator());
  return static_cast<int>(I.ring()->nvars()) - static_cast<int>(k);
}

int codim(const Ideal& I) { return static_cast<int>(I.ring()->nvars()) - krull_dim(I); }

std::int64_t degree(const Ideal& I) {
  if (I.is_unit()) throw AlgebraError("unit ideal has no scheme");
  auto [reduced, k] = reduce_numerator(I.hilbert_numerator());
  std::int64_t d = 0;
  for (auto c : reduced) d += c;
  return d;
}

HVector h_vector(const Ideal& I) {
  if (I.is_unit()) throw AlgebraError("unit ideal has no scheme");
  auto [reduced, k] = reduce_numerator(I.hilbert_numerator());
  return make_hvector(std::move(reduced));
}

bool is_regular_element(const Ideal& I, const Polynomial& f) { return quotient(I, f) == I; }

CmCertificate cm_test(const Ideal& I, const Rng& rng) {
  CmCertificate cert;
  cert.dimension = krull_dim(I);
  if (I.is_unit()) {
    cert.cohen_macaulay = true;
    return cert;
  }
  for (std::uint64_t attempt = 0; attempt < 3; ++attempt) {
    Rng r = rng.child(attempt);
    cert.seeds.push_back(r.seed());
    std::vector<Polynomial> forms;
    Ideal acc = I;
    bool regular = true;
    for (int i = 0; i < cert.dimension && regular; ++i) {
      Polynomial l = random_linear_form(I.ring(), r);
      forms.push_back(l);
      if (!(quotient(acc, l) == acc)) regular = false;
      acc = ideal_sum(acc, std::vector<Polynomial>{l});
    }
    cert.forms.push_back(forms);
    if (regular) {
      cert.cohen_macaulay = true;
      return cert;
    }
  }
  return cert;
}

Ideal extend_ring(const Ideal& I, const std::string& name) {
  RingPtr s = I.ring()->extend(name);
  std::vector<int> map(I.ring()->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.remap(s, map));
  return Ideal(s, std::move(gens));
}

Ideal contract_set_zero(const Ideal& I, const std::string& var) {
  int idx = I.ring()->index_of(var);
  if (idx < 0) throw AlgebraError("contract: unknown variable '" + var + "'");
  RingPtr r = I.ring()->without_variable(static_cast<std::size_t>(idx));
  std::vector<int> map(I.ring()->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) {
    int ii = static_cast<int>(i);
    map[i] = ii < idx ? ii : (ii == idx ? -1 : ii - 1);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.remap(r, map));
  return Ideal(r, std::move(gens));
}

Ideal change_order(const Ideal& I, const RingPtr& target) {
  if (target->names() != I.ring()->names()) throw AlgebraError("change_order: variables differ");
  std::vector<int> map(target->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.remap(target, map));
  return Ideal(target, std::move(gens));
}

Point normalize_point(Point p, const PrimeField& field) {
  auto it = std::find_if(p.begin(), p.end(), [](FieldElement v) { return !v.is_zero(); });
  if (it == p.end()) throw AlgebraError("the zero vector is not a projective point");
  FieldElement inv = field.inv(*it);
  for (auto& v : p) v = field.mul(v, inv);
  return p;
}

bool same_point(const Point& a, const Point& b, const PrimeField& field) {
  return normalize_point(a, field) == normalize_point(b, field);
}

std::vector<Polynomial> linear_forms_through(const RingPtr& ring, const Point& p) {
  if (p.size() != ring->nvars()) throw AlgebraError("point dimension does not match ring");
  const auto& field = ring->field();
  Point q = normalize_point(p, field);
  std::size_t j = 0;
  while (q[j].is_zero()) ++j;
  std::vector<Polynomial> forms;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i == j) continue;
    std::vector<FieldElement> c(q.size(), FieldElement{0});
    c[i] = FieldElement{1};
    c[j] = field.neg(q[i]);
    forms.push_back(Polynomial::linear_form(ring, c));
  }
  return forms;
}

Ideal point_ideal(const RingPtr& ring, const Point& p) { return Ideal(ring, linear_forms_through(ring, p)); }

Polynomial random_linear_form(const RingPtr& ring, Rng& rng) {
  std::vector<FieldElement> c(ring->nvars());
  for (auto& v : c) v = rng.element(ring->field());
  if (std::all_of(c.begin(), c.end(), [](FieldElement v) { return v.is_zero(); })) c[0] = FieldElement{1};
  return Polynomial::linear_form(ring, c);
}

Polynomial random_linear_form_through(const RingPtr& ring, const Point& p, Rng& rng) {
  auto basis = linear_forms_through(ring, p);
  for (;;) {
    Polynomial f(ring);
    for (const auto& b : basis) f = f + b.scaled(rng.element(ring->field()));
    if (!f.is_zero()) return f;
  }
}

}  // namespace glink
