#include "glink/lifting.hpp"

#include <algorithm>

#include "glink/error.hpp"

namespace glink {

MonomialIdealInput MonomialIdealInput::make(RingPtr ring, std::vector<Monomial> generators) {
  if (!ring) throw AlgebraError("monomial ideal needs a ring");
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i == j || !generators[j].divides(generators[i])) continue;
      // equal generators: keep the first copy
      redundant = generators[j] != generators[i] || j < i;
    }
    if (!redundant) kept.push_back(generators[i]);
  }
  const auto& order = ring->order();
  std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) { return order.less(b, a); });
  return {std::move(ring), std::move(kept)};
}

MonomialIdealInput MonomialIdealInput::from_ideal(const Ideal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    if (g.is_zero()) continue;
    if (g.terms().size() != 1) throw AlgebraError("not a monomial: " + g.to_string());
    gens.push_back(g.leading_monomial());
  }
  return make(I.ring(), std::move(gens));
}

Ideal MonomialIdealInput::ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& m : generators) gens.push_back(Polynomial::monomial(ring, m, ring->field().one()));
  return Ideal(ring, std::move(gens));
}

std::uint32_t MonomialIdealInput::max_exponent() const {
  std::uint32_t e = 0;
  for (const auto& m : generators)
    for (std::size_t i = 0; i < ring->nvars(); ++i) e = std::max<std::uint32_t>(e, m[i]);
  return e;
}

Polynomial lift_monomial(const RingPtr& S, const Monomial& m, std::size_t t_index) {
  const auto& field = S->field();
  if (t_index >= S->nvars()) throw AlgebraError("lift_monomial: t is not a variable of the ring");
  if (m[t_index] != 0) throw AlgebraError("lift_monomial: the monomial involves t");
  Polynomial t = Polynomial::variable(S, t_index);
  Polynomial out = Polynomial::constant(S, 1);
  for (std::size_t i = 0; i < S->nvars(); ++i) {
    if (m[i] == 0) continue;
    if (m[i] >= field.prime())
      throw AlgebraError("lifting needs p > every exponent; p = " + std::to_string(field.prime()) + ", exponent " +
                         std::to_string(m[i]));
    Polynomial x = Polynomial::variable(S, i);
    for (std::uint32_t j = 0; j < m[i]; ++j) out = out * (x - t.scaled(field.from_int(j)));
  }
  return out;
}

Lifting lift_ideal(const MonomialIdealInput& I) {
  const auto& field = I.ring->field();
  if (I.max_exponent() >= field.prime())
    throw AlgebraError("lifting needs p > every exponent; p = " + std::to_string(field.prime()) + ", exponent " +
                       std::to_string(I.max_exponent()));
  std::string t = I.ring->fresh_name("t");
  RingPtr S = I.ring->extend(t);
  std::size_t ti = S->nvars() - 1;
  std::vector<Polynomial> gens;
  std::vector<int> map(I.ring->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  for (const auto& m : I.generators) {
    Polynomial g = Polynomial::monomial(I.ring, m, field.one()).remap(S, map);
    gens.push_back(lift_monomial(S, g.leading_monomial(), ti));
  }
  return {I, S, t, Ideal(S, std::move(gens))};
}

bool LiftingCertificate::passed() const {
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (c.name == "S/J Cohen-Macaulay" && !input_cohen_macaulay) continue;
    return false;
  }
  return true;
}

bool LiftingCertificate::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed;
  throw AlgebraError("no check named '" + name + "'");
}

LiftingCertificate verify_lifting(const Lifting& L, const Rng& rng, std::size_t bound) {
  LiftingCertificate cert;
  Ideal I = L.input.ideal();
  const Ideal& J = L.J;
  cert.bound = bound ? bound : default_bound(I);
  Polynomial t = Polynomial::variable(L.S, L.S->nvars() - 1);
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    cert.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  Ideal back = contract_set_zero(J, L.t);
  bool recovers = back.generators().size() == I.generators().size();
  for (std::size_t i = 0; recovers && i < I.generators().size(); ++i)
    recovers = back.generators()[i] == I.generators()[i];
  add("t = 0 recovers the generators of I", recovers);

  add("J : t = J", quotient(J, t) == J);
  Ideal Jt = ideal_sum(J, std::vector<Polynomial>{t});
  Ideal It = ideal_sum(extend_ring(I, L.t), std::vector<Polynomial>{t});
  add("(J, t) = (I S, t)", Jt == It);

  std::size_t first_bad = cert.bound + 1;
  for (std::size_t d = 0; d <= cert.bound && first_bad > cert.bound; ++d)
    if (hilbert_function(Jt, d) != hilbert_function(I, d)) first_bad = d;
  add("HF(S/(J, t)) = HF(R/I)", first_bad > cert.bound,
      first_bad > cert.bound ? "degrees 0.." + std::to_string(cert.bound)
                             : "differs in degree " + std::to_string(first_bad));

  auto ci = cm_test(I, rng.child("cm-input"));
  auto cj = cm_test(J, rng.child("cm-lift"));
  cert.seeds.insert(cert.seeds.end(), ci.seeds.begin(), ci.seeds.end());
  cert.seeds.insert(cert.seeds.end(), cj.seeds.begin(), cj.seeds.end());
  cert.input_cohen_macaulay = ci.cohen_macaulay;
  cert.lift_cohen_macaulay = cj.cohen_macaulay;
  add("S/J Cohen-Macaulay", cj.cohen_macaulay,
      std::string("R/I is ") + (ci.cohen_macaulay ? "" : "not ") + "Cohen-Macaulay");

  if (krull_dim(J) == 1) {
    auto red = is_reduced_zero_dim(J, rng.child("reduced"));
    cert.seeds.insert(cert.seeds.end(), red.seeds.begin(), red.seeds.end());
    cert.reduced = red.reduced;
    add("J is a reduced set of points", red.reduced, std::to_string(red.degree) + " points");
    add("degree J = degree I", red.degree == degree(I));
  }
  return cert;
}

}  // namespace glink
