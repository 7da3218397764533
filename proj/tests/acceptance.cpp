// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "glink/error.hpp"
#include "glink/fatpoints.hpp"
#include "glink/groebner.hpp"
#include "glink/lifting.hpp"
#include "oracles.hpp"

using namespace glink;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Polynomial random_homogeneous(const RingPtr& ring, unsigned d, Rng& rng, std::size_t max_terms) {
  auto monos = oracle::monomials_of_degree(ring->nvars(), d);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < max_terms; ++k) terms.push_back({rng.element(ring->field()), monos[rng.next() % monos.size()]});
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial product_of_forms(const RingPtr& r, int count, Rng& rng) {
  Polynomial p = Polynomial::constant(r, 1);
  for (int i = 0; i < count; ++i) p = p * random_linear_form(r, rng);
  return p;
}

// General element of I in degree d.
Polynomial random_element(const Ideal& I, int d, Rng& rng) {
  Polynomial sum(I.ring());
  for (const auto& g : I.generators()) {
    if (g.degree() > d) continue;
    auto monos = oracle::monomials_of_degree(I.ring()->nvars(), static_cast<unsigned>(d - g.degree()));
    Polynomial c(I.ring());
    for (const auto& m : monos) c = c + Polynomial::monomial(I.ring(), m, rng.element(I.ring()->field()));
    sum = sum + c * g;
  }
  return sum;
}

Ideal power_of_variables(const RingPtr& r, std::size_t first, int a) {
  std::vector<Polynomial> gens;
  std::size_t n = r->nvars();
  for (const auto& m : oracle::monomials_of_degree(n - first, static_cast<unsigned>(a))) {
    std::vector<int> e(n, 0);
    for (std::size_t i = 0; i < n - first; ++i) e[first + i] = m[i];
    gens.push_back(Polynomial::monomial(r, Monomial(std::span<const int>(e)), r->field().one()));
  }
  return Ideal(r, gens);
}

Ideal points_ideal(const RingPtr& r, std::size_t count, Rng& rng) {
  std::vector<Ideal> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (std::size_t k = 0; k < r->nvars(); ++k) p.push_back(rng.element(r->field()));
    pts.push_back(point_ideal(r, p));
  }
  return intersect_all(pts);
}

FatPointScheme scheme(const RingPtr& r, std::vector<std::pair<std::vector<std::int64_t>, int>> pts) {
  FatPointScheme Z;
  for (auto& [c, m] : pts) Z.points.push_back({PointP3::make(r->field(), c), m});
  return Z;
}

// ---- 1 ----
Outcome hvector_formulas() {
  int bad = 0;
  std::string first_bad;
  for (int n = 2; n <= 4; ++n)
    for (int a = 2; a <= 5; ++a) {
      auto r = PolyRing::standard(static_cast<std::size_t>(n + 1));
      HVector h = h_vector(power_of_variables(r, 1, a));
      std::vector<std::int64_t> want;
      for (int k = 0; k < a; ++k) want.push_back(oracle::binomial(n + k - 1, k));
      if (h.entries != want || h != fatpoint_hvector_formula(n, a)) {
        if (!bad++) first_bad = "n=" + std::to_string(n) + " a=" + std::to_string(a) + ": " + join(h.entries);
      }
    }
  return {bad == 0, bad ? first_bad : "12 of 12 pairs (n, a) agree"};
}

// ---- 2 ----
Outcome single_fatpoint() {
  auto r = p3_ring();
  auto P = PointP3::make(r->field(), {1, 0, 0, 0});
  const std::vector<std::vector<std::int64_t>> expected{{1, 3, 1}, {1, 3, 6, 3, 1}};
  std::string detail;
  bool ok = true;
  for (int a = 2; a <= 3; ++a) {
    auto rep = single_fatpoint_link_step(r, P, a, Rng(static_cast<std::uint64_t>(a)));
    const auto& step = rep.steps.at(0);
    HVector h = h_vector(*step.linking_ideal);
    bool residual = *step.residual == fat_point_ideal(r, P, a - 1);
    bool good = rep.passed() && h.entries == expected[a - 2] && residual;
    ok = ok && good;
    detail += "a=" + std::to_string(a) + " Gor " + join(h.entries) + (residual ? " residual p^" : " residual != p^") +
              std::to_string(a - 1) + "; ";
  }
  auto chain = single_fatpoint_chain(r, P, 3, Rng(11));
  bool chain_ok = chain.passed() && chain.steps.size() == 2 && chain.final_ideal &&
                  *chain.final_ideal == point_ideal(r, P);
  detail += "chain from p^3: " + std::to_string(chain.steps.size()) + " links" + (chain_ok ? " ending at p" : " (bad)");
  return {ok && chain_ok, detail};
}

// ---- 3 ----
std::string describe_double_step(const DoubleStepResult& res, int a, int b, bool& ok) {
  std::string why;
  for (const auto& s : res.report.steps)
    for (const auto& c : s.checks)
      if (!c.passed && why.size() < 200) why += (why.empty() ? "" : "; ") + c.name;
  for (const auto& c : res.report.checks)
    if (!c.passed && why.size() < 200) why += (why.empty() ? "" : "; ") + c.name;
  ok = res.report.passed() && res.next_is_fat_point_union && res.report.steps.size() == 2;
  if (ok) {
    auto r = p3_ring();
    int at_p = 0, at_p2 = 0;
    for (const auto& fp : res.next.points) {
      if (fp.point == PointP3::make(r->field(), {1, 0, 0, 0})) at_p = fp.multiplicity;
      else if (fp.point == PointP3::make(r->field(), {0, 0, 0, 1})) at_p2 = fp.multiplicity;
      else {
        if (fp.multiplicity != 1) ok = false;
        for (const auto& R : res.r_points)
          if (fp.point == R) ok = false;
      }
    }
    ok = ok && at_p == a - 2 && at_p2 == b;
  }
  std::string head = "(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ") ";
  return head + (ok ? "ok" : "fails: " + (why.empty() ? std::string("shape of Z''") : why));
}

Outcome double_step(bool repaired) {
  auto r = p3_ring();
  DoubleStepOptions o;
  o.skip_redundant_r_forms = repaired;
  bool all = true;
  std::string detail;
  for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 1}}) {
    auto Z = scheme(r, {{{1, 0, 0, 0}, a}, {{0, 0, 0, 1}, b}});
    bool ok = false;
    try {
      auto res = theorem32_double_step(r, Z, 0, Rng(7), o);
      detail += describe_double_step(res, a, b, ok) + " | ";
    } catch (const std::exception& e) {
      detail += "(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ") error: " + e.what() + " | ";
    }
    all = all && ok;
  }
  return {all, detail.substr(0, detail.size() - 3)};
}

// ---- 4 ----
Outcome full_reduction(bool repaired) {
  auto r = p3_ring();
  auto Z = scheme(r, {{{1, 0, 0, 0}, 2}, {{0, 0, 0, 1}, 2}});
  ReduceOptions o;
  o.step.skip_redundant_r_forms = repaired;
  try {
    auto rep = reduce_to_reduced(r, Z, Rng(7), o);
    bool reduced = false;
    std::string why;
    for (const auto& c : rep.checks) {
      if (c.name == "final scheme reduced") reduced = c.passed;
      if (!c.passed && why.empty()) why = ", fails: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    }
    bool ok = rep.passed() && reduced && rep.steps.size() == 4;
    return {ok, std::to_string(rep.steps.size()) + " links, final scheme " + (reduced ? "reduced" : "not known reduced") + why};
  } catch (const ResourceLimitError& e) {
    return {false, std::string("resource limit: ") + e.what()};
  } catch (const std::exception& e) {
    return {false, std::string("error: ") + e.what()};
  }
}

// ---- 5 ----
Outcome key_link() {
  auto r = PolyRing::standard(4);
  int good = 0;
  std::string first_bad;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(Rng(500).child(seed));
    int c = 2 + static_cast<int>(seed % 2);
    std::vector<Polynomial> gens;
    for (int k = 0; k < c; ++k) gens.push_back(random_homogeneous(r, 1 + static_cast<unsigned>(rng.next() % 2), rng, 40));
    Ideal I(r, gens);
    Polynomial f = random_linear_form(r, rng);
    Ideal J = ideal_sum(I, std::vector<Polynomial>{random_homogeneous(r, 1 + static_cast<unsigned>(rng.next() % 2), rng, 40)});
    bool ok = codim(I) == c && is_regular_element(I, f);
    if (ok) {
      LinkStep s = lemma_key_link(I, f, J, rng);
      Ideal G = ideal_sum(I, scale_ideal(f, J));
      ok = s.passed() && quotient(G, ideal_sum(I, std::vector<Polynomial>{f})) == J;
    }
    if (ok) ++good;
    else if (first_bad.empty()) first_bad = ", first failure at seed " + std::to_string(seed);
  }
  return {good == 20, std::to_string(good) + " of 20 instances satisfy (I + fJ) : (I, f) = J" + first_bad};
}

// ---- 6 ----
Outcome hilbert_invariance() {
  auto P3 = PolyRing::standard(4);
  auto P2 = PolyRing::standard(3);
  std::vector<std::pair<std::string, Ideal>> cases;
  Rng rng(600);
  cases.emplace_back("CI (2,3) in P3", Ideal::parse(P3, {"x0^2 + x1*x2", "x1^3 - x2*x3^2"}));
  cases.emplace_back("CI (2,2,2) in P3", Ideal(P3, {random_homogeneous(P3, 2, rng, 6), random_homogeneous(P3, 2, rng, 6),
                                                   random_homogeneous(P3, 2, rng, 6)}));
  cases.emplace_back("twisted cubic", Ideal::parse(P3, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}));
  cases.emplace_back("double point in P3", power_of_variables(P3, 1, 2));
  cases.emplace_back("triple point in P2", power_of_variables(P2, 1, 3));
  cases.emplace_back("3 points in P2", points_ideal(P2, 3, rng));
  cases.emplace_back("6 points in P2", points_ideal(P2, 6, rng));
  cases.emplace_back("5 points in P3", points_ideal(P3, 5, rng));
  cases.emplace_back("plane cubic", Ideal(P2, {random_homogeneous(P2, 3, rng, 8)}));
  cases.emplace_back("hypersurface in P3", Ideal::parse(P3, {"x0^2*x1 - x2^3 + x3^3"}));
  int good = 0;
  std::string first_bad;
  for (const auto& [name, I] : cases) {
    bool acm = cm_test(I, Rng(601)).cohen_macaulay;
    Ideal E = embedded_ideal(I);
    std::size_t bound = default_bound(I);
    bool same = true;
    for (std::size_t d = 0; d <= bound; ++d) {
      auto lhs = hilbert_function(I, d);
      auto rhs = static_cast<std::int64_t>(oracle::hilbert_function(E.generators(), E.ring(), static_cast<unsigned>(d)));
      same = same && lhs == rhs && rhs == hilbert_function(E, d);
    }
    if (acm && same) ++good;
    else if (first_bad.empty()) first_bad = ", fails on " + name + (acm ? "" : " (not ACM)");
  }
  return {good == 10, std::to_string(good) + " of 10 ACM ideals keep their Hilbert function" + first_bad};
}

// ---- 7 ----
Outcome lifting() {
  auto R2 = PolyRing::make({"x", "y"});
  auto R3 = PolyRing::make({"x", "y", "z"});
  std::vector<Ideal> cases{
      Ideal::parse(R2, {"x^2", "x*y", "y^2"}),
      Ideal::parse(R3, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}),
      Ideal::parse(R2, {"x^3", "y^2"}),
      Ideal::parse(R2, {"x^4", "x^2*y", "y^3"}),
      Ideal::parse(R2, {"x^3", "x^2*y^2", "y^4"}),
      Ideal::parse(R2, {"x^5", "x*y", "y^2"}),
      Ideal::parse(R3, {"x^2", "y^2", "z^2"}),
      Ideal::parse(R3, {"x^3", "x*y", "y^3", "z^2", "x*z"}),
      Ideal::parse(R3, {"x^2", "y^3", "z^3", "x*y*z"}),
      Ideal::parse(R3, {"x^3", "y^3", "z^3", "x^2*y", "y^2*z"}),
  };
  int good = 0;
  std::string first_bad;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    auto L = lift_ideal(MonomialIdealInput::from_ideal(cases[k]));
    auto cert = verify_lifting(L, Rng(700 + k));
    bool ok = cert.check("J : t = J") && cert.check("(J, t) = (I S, t)") && cert.check("HF(S/(J, t)) = HF(R/I)") &&
              cert.reduced.value_or(false) && cert.passed();
    if (ok) ++good;
    else if (first_bad.empty()) first_bad = ", fails on ideal " + std::to_string(k);
  }
  return {good == 10, std::to_string(good) + " of 10 artinian monomial ideals lift to reduced point sets" + first_bad};
}

// ---- 8 ----
Outcome involution() {
  auto r = PolyRing::standard(4);
  int good = 0, points = 0, curves = 0;
  std::string first_bad;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(Rng(800).child(seed));
    Ideal I = Ideal::unit(r);
    std::vector<Polynomial> c;
    if (seed % 2 == 0) {
      // 4 to 7 general points, linked by three general quadrics through them
      I = points_ideal(r, 4 + seed / 2 % 4, rng);
      for (int k = 0; k < 3; ++k) c.push_back(random_element(I, 2, rng));
      ++points;
    } else {
      // a union of lines on two quadric cones, linked by two cubics containing it
      Polynomial a = product_of_forms(r, 2, rng), b = product_of_forms(r, 2, rng);
      I = Ideal(r, {a, b});
      c = {a * random_linear_form(r, rng), b * random_linear_form(r, rng)};
      ++curves;
    }
    bool ok = false;
    try {
      LinkStep s = ci_link(I, c, rng);
      ok = s.check("geometric") && link_involution_check(I, Ideal(r, c));
    } catch (const std::exception&) {
    }
    if (ok) ++good;
    else if (first_bad.empty()) first_bad = ", first failure at seed " + std::to_string(seed);
  }
  return {good == 20, std::to_string(good) + " of 20 links (" + std::to_string(points) + " point sets, " +
                          std::to_string(curves) + " curves) satisfy c : (c : I) = I" + first_bad};
}

// ---- 9 ----
Outcome gb_oracle() {
  Rng rng(900);
  std::size_t tested = 0, agree = 0, members = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto r = PolyRing::standard(2 + static_cast<std::size_t>(trial % 3));
    std::vector<Polynomial> gens;
    std::size_t ngens = 2 + rng.next() % 2;
    for (std::size_t k = 0; k < ngens; ++k) gens.push_back(random_homogeneous(r, 1 + static_cast<unsigned>(rng.next() % 3), rng, 4));
    Ideal I(r, gens);
    for (unsigned d = 1; d <= 6; ++d)
      for (int k = 0; k < 4; ++k) {
        Polynomial f = random_homogeneous(r, d, rng, 3);
        if (k < 2 && d > gens[0].degree()) f = random_homogeneous(r, d - gens[0].degree(), rng, 3) * gens[0];
        if (k == 2 && d > 1) f = f + random_element(I, static_cast<int>(d), rng);
        if (f.is_zero() || !f.is_homogeneous()) continue;
        bool gb = membership(f, I);
        bool la = oracle::member_by_linear_algebra(f, gens);
        ++tested;
        agree += gb == la;
        members += la;
      }
  }
  return {tested > 0 && agree == tested, std::to_string(agree) + " of " + std::to_string(tested) +
                                             " membership queries agree (" + std::to_string(members) + " members)"};
}

Outcome timed(const Criterion& c, double& seconds) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (seconds > c.limit_seconds) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "h-vectors of fat points", 30, hvector_formulas},
      {2, "single fat point link and chain", 60, single_fatpoint},
      {3, "double step at a fat point", 1200, [] { return double_step(false); }},
      {4, "full reduction of two double points", 1200, [] { return full_reduction(false); }},
      {5, "key link identity", 120, key_link},
      {6, "Hilbert function after embedding", 600, hilbert_invariance},
      {7, "lifting of monomial ideals", 120, lifting},
      {8, "involution of complete intersection links", 600, involution},
      {9, "Groebner membership vs linear algebra", 600, gb_oracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    double s = 0;
    Outcome o = timed(c, s);
    failed += !o.pass;
    std::printf("%s criterion %d: %s [%.1fs] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
    if (c.id == 3 || c.id == 4) {
      Criterion variant{c.id, c.title, c.limit_seconds,
                        [id = c.id] { return id == 3 ? double_step(true) : full_reduction(true); }};
      Outcome v = timed(variant, s);
      std::printf("  info criterion %d with redundant forms left out: %s [%.1fs] %s\n", c.id, v.pass ? "pass" : "fail", s,
                  v.detail.c_str());
      std::fflush(stdout);
    }
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
