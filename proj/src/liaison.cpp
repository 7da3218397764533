#include "glink/liaison.hpp"

#include <algorithm>

#include "glink/error.hpp"

namespace glink {

namespace {

constexpr std::size_t kSummaryTermLimit = 400;

std::int64_t degree_or_zero(const Ideal& I) { return I.is_unit() ? 0 : degree(I); }

}  // namespace

IdealSummary summarize(const std::string& name, const Ideal& I, bool with_h_vector) {
  IdealSummary s;
  s.name = name;
  std::size_t terms = 0;
  for (const auto& g : I.generators()) terms += g.terms().size();
  for (const auto& g : I.generators()) {
    s.generator_degrees.push_back(g.degree());
    if (terms <= kSummaryTermLimit) s.generators.push_back(g.to_string());
  }
  if (terms > kSummaryTermLimit) s.note = "generators omitted (" + std::to_string(terms) + " terms)";
  s.gb_size = I.groebner_basis().size();
  s.dimension = krull_dim(I);
  if (!I.is_unit()) {
    s.degree = degree(I);
    if (with_h_vector) s.h_vector = h_vector(I);
  }
  return s;
}

// ---- LinkStep / LinkChainReport ----

bool LinkStep::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool LinkStep::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed;
  throw AlgebraError("no check named '" + name + "'");
}

void LinkStep::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

bool LinkChainReport::passed() const {
  for (const auto& s : steps)
    if (!s.passed()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<bool> LinkChainReport::verdicts() const {
  std::vector<bool> v;
  for (const auto& s : steps) v.push_back(s.passed());
  return v;
}

bool LinkChainReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed;
  throw AlgebraError("no check named '" + name + "'");
}

void LinkChainReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void LinkChainReport::append(const LinkChainReport& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  objects.insert(objects.end(), other.objects.begin(), other.objects.end());
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  seeds.insert(seeds.end(), other.seeds.begin(), other.seeds.end());
  narrative.insert(narrative.end(), other.narrative.begin(), other.narrative.end());
  if (other.final_ideal) final_ideal = other.final_ideal;
}

// ---- helpers ----

std::vector<Polynomial> minimal_generators(const Ideal& I) {
  std::vector<Polynomial> gens = I.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    if (!kept.empty() && Ideal(I.ring(), kept).contains(g)) continue;
    kept.push_back(g);
  }
  return kept;
}

bool is_complete_intersection(const Ideal& I) {
  if (I.is_unit()) return false;
  return static_cast<int>(minimal_generators(I).size()) == codim(I);
}

std::size_t default_bound(const Ideal& I) {
  int d = 0;
  for (const auto& g : I.generators()) d = std::max(d, g.degree());
  return static_cast<std::size_t>(2 * d + 4);
}

// ---- links ----

bool is_geometric_link(const Ideal& I, const Ideal& c, const Ideal& W) {
  (void)c;
  if (W.is_unit() || I.is_unit()) return false;
  return codim(ideal_sum(I, W)) > codim(I);
}

bool link_involution_check(const Ideal& I, const Ideal& c) {
  return quotient(c, quotient(c, I)) == I;
}

LinkStep ci_link(const Ideal& I, const std::vector<Polynomial>& ci_gens, const Rng& rng,
                 LinkOptions options) {
  Ideal c(I.ring(), ci_gens);
  if (ci_gens.empty() || c.is_unit()) throw AlgebraError("linking ideal must be a proper complete intersection");
  if (!I.contains(c)) throw AlgebraError("containment: linking ideal is not contained in the input ideal");
  int cc = codim(c);
  if (cc != static_cast<int>(ci_gens.size()))
    throw AlgebraError("linking generators are not a regular sequence (codim " + std::to_string(cc) +
                       " for " + std::to_string(ci_gens.size()) + " generators)");
  if (cc != codim(I))
    throw AlgebraError("codim mismatch: linking ideal has codim " + std::to_string(cc) +
                       ", input has codim " + std::to_string(codim(I)));
  LinkStep step;
  step.label = "I -> c : I";
  step.linking_kind = "complete intersection";
  step.linking_ideal = c;
  step.input = I;
  step.add("containment", true);
  step.add("codim match", true, std::to_string(cc));
  if (options.check_cm) {
    auto cert = cm_test(I, rng.child("cm-input"));
    step.seeds.insert(step.seeds.end(), cert.seeds.begin(), cert.seeds.end());
    if (!cert.cohen_macaulay) throw AlgebraError("input is not Cohen-Macaulay (cm_test)");
    step.add("input Cohen-Macaulay", true);
  }
  Ideal W = quotient(c, I);
  step.residual = W;
  std::int64_t product = 1;
  for (const auto& g : ci_gens) product *= g.degree();
  std::int64_t dI = degree(I), dW = degree_or_zero(W);
  step.add("degree additivity", dI + dW == product,
           std::to_string(dI) + " + " + std::to_string(dW) + " = " + std::to_string(product));
  step.add("geometric", is_geometric_link(I, c, W));
  if (!W.is_unit()) {
    auto cert = cm_test(W, rng.child("cm-residual"));
    step.seeds.insert(step.seeds.end(), cert.seeds.begin(), cert.seeds.end());
    step.add("residual Cohen-Macaulay", cert.cohen_macaulay);
  }
  if (krull_dim(c) == 0 || krull_dim(c) == 1) step.add("linking h-vector symmetric", h_vector(c).symmetric());
  step.gb_sizes["input"] = I.groebner_basis().size();
  step.gb_sizes["linking"] = c.groebner_basis().size();
  step.gb_sizes["residual"] = W.groebner_basis().size();
  return step;
}

GorensteinCertificate certify_gorenstein(const Ideal& J, int expected_codim, const Rng& rng) {
  GorensteinCertificate cert;
  cert.codim_ok = codim(J) == expected_codim;
  auto cm = cm_test(J, rng.child("gorenstein-cm"));
  cert.seeds = cm.seeds;
  cert.cohen_macaulay = cm.cohen_macaulay;
  cert.h_vector = h_vector(J);
  cert.symmetric = !cert.h_vector.has_negative && cert.h_vector.symmetric();
  return cert;
}

GorensteinSum gorenstein_sum(const Ideal& Y, const Ideal& W, const Ideal& c, const Rng& rng) {
  if (!is_geometric_link(Y, c, W)) throw AlgebraError("gorenstein_sum requires a geometric link");
  GorensteinSum out;
  out.ideal = saturate_irrelevant(ideal_sum(Y, W));
  out.certificate = certify_gorenstein(out.ideal, codim(Y) + 1, rng);
  return out;
}

LinkStep lemma_key_link(const Ideal& I, const Polynomial& f, const Ideal& J, const Rng& rng) {
  require_same_ring(I.ring(), J.ring(), "lemma_key_link");
  if (f.is_zero() || f.degree() < 1 || !f.is_homogeneous())
    throw AlgebraError("f must be a homogeneous form of positive degree");
  if (!J.contains(I)) throw AlgebraError("lemma precondition: I is not contained in J");
  if (codim(J) != codim(I) + 1)
    throw AlgebraError("lemma precondition: codim(J) = " + std::to_string(codim(J)) +
                       " but codim(I) + 1 = " + std::to_string(codim(I) + 1));
  if (!is_regular_element(I, f)) throw AlgebraError("lemma precondition: f is a zero divisor modulo I");

  Ideal G = ideal_sum(I, scale_ideal(f, J));
  Ideal If = ideal_sum(I, std::vector<Polynomial>{f});
  Ideal lhs = quotient(G, If);
  Ideal by_f = quotient(G, f);
  Ideal split = ideal_sum(quotient(I, f), J);

  LinkStep step;
  step.label = "(I, f) -> J";
  step.linking_kind = "gorenstein (certified: necessary conditions)";
  step.linking_ideal = G;
  step.input = If;
  step.residual = J;
  step.add("I contained in J", true);
  step.add("codim(J) = codim(I) + 1", true);
  step.add("f regular modulo I", true);
  step.add("(I + fJ) : (I, f) = J", lhs == J);
  step.add("(I + fJ) : f = J", by_f == J);
  step.add("(I : f) + J = J", split == J);
  step.add("(I + fJ) : J contains (I, f)", quotient(G, J).contains(If));
  auto cert = certify_gorenstein(G, codim(J), rng.child("G"));
  step.seeds = cert.seeds;
  step.add("G certified Gorenstein (necessary conditions)", cert.passed(),
           "h-vector " + cert.h_vector.to_string());
  step.gb_sizes["G"] = G.groebner_basis().size();
  step.gb_sizes["J"] = J.groebner_basis().size();
  if (!(lhs == J)) throw VerificationError("lemma identity violated");
  return step;
}

Ideal embedded_ideal(const Ideal& I) {
  std::string t = I.ring()->index_of("t") >= 0 ? I.ring()->fresh_name("t") : "t";
  Ideal IS = extend_ring(I, t);
  auto S = IS.ring();
  return ideal_sum(IS, std::vector<Polynomial>{Polynomial::variable(S, S->nvars() - 1)});
}

EmbedResult embed_and_link(const Ideal& I, const std::optional<Ideal>& witness, const Rng& rng,
                           std::size_t bound) {
  auto cert = cm_test(I, rng.child("cm"));
  if (!cert.cohen_macaulay) throw AlgebraError("input is not Cohen-Macaulay (cm_test)");
  EmbedResult out;
  out.bound = bound;
  out.embedded = embedded_ideal(I);
  auto S = out.embedded.ring();
  Polynomial t = Polynomial::variable(S, S->nvars() - 1);
  std::vector<Polynomial> gens;
  for (const auto& g : out.embedded.generators())
    if (!(g == t)) gens.push_back(g);
  Ideal IS(S, gens);

  Ideal J;
  if (witness) {
    if (!same_ring(witness->ring(), S)) throw AlgebraError("witness must live in the extended ring");
    auto wc = certify_gorenstein(*witness, codim(IS) + 1, rng.child("witness"));
    if (!wc.passed()) throw AlgebraError("witness is not Gorenstein (necessary conditions failed)");
    J = *witness;
    out.witness_source = "supplied";
  } else if (IS.is_zero() || is_complete_intersection(IS)) {
    int d = 1;
    for (const auto& g : IS.generators()) d = std::max(d, g.degree());
    Rng r = rng.child("witness-form");
    Polynomial g = Polynomial::constant(S, 0);
    for (int attempt = 0; attempt < 3; ++attempt) {
      Polynomial cand = Polynomial::constant(S, 1);
      for (int k = 0; k < d; ++k) cand = cand * random_linear_form(S, r);
      if (is_regular_element(IS, cand)) {
        g = cand;
        break;
      }
    }
    if (g.is_zero()) throw GenericityError("no general form regular modulo I S found");
    J = ideal_sum(IS, std::vector<Polynomial>{g});
    out.witness_source = "complete intersection I S + (general form of degree " + std::to_string(d) + ")";
  } else {
    throw AlgebraError("Gorenstein witness required");
  }

  out.step = lemma_key_link(IS, t, J, rng.child("key"));
  out.step.label = "(I S, t) -> J";
  out.step.seeds.insert(out.step.seeds.begin(), cert.seeds.begin(), cert.seeds.end());
  bool same = true;
  for (std::size_t d = 0; d <= bound; ++d)
    if (hilbert_function(I, d) != hilbert_function(out.embedded, d)) same = false;
  out.hilbert_function_preserved = same;
  out.step.add("HF(R/I) = HF(S/(I S, t)) up to degree " + std::to_string(bound), same);
  return out;
}

LinkChainReport proper_ci_intersection_link(const Ideal& V1, const std::vector<Polynomial>& ci_gens,
                                            const Rng& rng,
                                            const std::map<std::size_t, Ideal>& witnesses) {
  LinkChainReport report;
  report.title = "proper intersection with a complete intersection";
  report.prime = V1.ring()->field().prime();
  report.initial = V1;
  Ideal V2(V1.ring(), ci_gens);
  int expected = krull_dim(V1) - static_cast<int>(ci_gens.size());
  Ideal both = ideal_sum(V1, V2);
  if (codim(V2) != static_cast<int>(ci_gens.size()))
    throw AlgebraError("V2 generators are not a complete intersection");
  if (krull_dim(both) != std::max(expected, 0) || both.is_unit())
    throw AlgebraError("improper intersection: dim(V1 ∩ V2) does not match dim V1 + dim V2 - n");
  report.add("proper intersection", true, "krull dim " + std::to_string(krull_dim(both)));

  if (V1.is_zero()) {
    report.final_ideal = V2;
    report.add("already a complete intersection", true);
    report.narrative.push_back("V1 is the whole space, so V1 ∩ V2 = V2 is a complete intersection.");
    return report;
  }
  auto cm = cm_test(V1, rng.child("cm"));
  report.seeds.insert(report.seeds.end(), cm.seeds.begin(), cm.seeds.end());
  if (!cm.cohen_macaulay) throw AlgebraError("V1 is not arithmetically Cohen-Macaulay (cm_test)");

  Ideal current = V1;
  for (std::size_t k = 0; k < ci_gens.size(); ++k) {
    const Polynomial& f = ci_gens[k];
    if (!is_regular_element(current, f))
      throw AlgebraError("generator " + std::to_string(k + 1) + " is not regular modulo the accumulated ideal");
    Rng r = rng.child(k);
    Ideal J;
    auto it = witnesses.find(k);
    if (it != witnesses.end()) {
      J = it->second;
      auto wc = certify_gorenstein(J, codim(current) + 1, r.child("witness"));
      if (!wc.passed()) throw AlgebraError("witness is not Gorenstein (necessary conditions failed)");
    } else if (is_complete_intersection(current)) {
      Rng wr = r.child("witness-form");
      Polynomial g = random_linear_form(current.ring(), wr);
      J = ideal_sum(current, std::vector<Polynomial>{g});
    } else {
      throw AlgebraError("Gorenstein witness required");
    }
    LinkStep step = lemma_key_link(current, f, J, r);
    step.label = "step " + std::to_string(k + 1);
    report.steps.push_back(step);
    current = *step.input;
  }
  report.final_ideal = current;
  report.add("final ideal equals I_V1 + I_V2", current == both);
  report.narrative.push_back("Each (I, f_k) is directly G-linked to a Gorenstein witness J_k.");
  return report;
}

}  // namespace glink
