// Command-line front end: hvector, link, fatpoints, lift, embed.
//
// Exit codes: 0 success, 1 resource limit, 2 verification failure, 3 genericity exhaustion,
// 4 parse, configuration or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "glink/error.hpp"
#include "glink/io.hpp"

using namespace glink;
using io::Json;

namespace {

enum Exit { kOk = 0, kResource = 1, kVerification = 2, kGenericity = 3, kConfig = 4 };

struct Options {
  std::string input;
  std::uint32_t prime = 0;  // 0: from the file, else the default
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t bound = 0;
  std::string format = "json";
  std::string out;
  // fatpoints
  long focus = -1;
  bool skip_redundant = false;
  std::int64_t max_degree = 200;
};

struct Outcome {
  Json json;
  std::string text;
  bool ok = true;
};

std::optional<std::uint32_t> prime_flag(const Options& o) {
  return o.prime ? std::optional<std::uint32_t>(o.prime) : std::nullopt;
}

std::uint64_t pick_seed(const Options& o, std::optional<std::uint64_t> file_seed) {
  if (o.seed_set) return o.seed;
  return file_seed.value_or(1);
}

Json load(const Options& o) { return io::parse_json(io::read_file(o.input)); }

Outcome cmd_hvector(const Options& o, std::uint64_t& seed, std::uint32_t& prime) {
  auto f = io::read_ideal_file(load(o), prime_flag(o));
  seed = pick_seed(o, f.seed);
  prime = f.ring->field().prime();
  const Ideal& I = f.ideal;
  if (I.is_unit()) throw AlgebraError("unit ideal has no scheme");
  HVector h = h_vector(I);
  auto cm = cm_test(I, Rng(seed));
  Outcome out;
  out.json["h_vector"] = io::to_json(h);
  out.json["degree"] = degree(I);
  out.json["dimension"] = krull_dim(I);
  out.json["cohen_macaulay"] = cm.cohen_macaulay;
  if (h.has_negative) out.json["note"] = "negative entry: not ACM or not saturated";
  out.json["table"] = h.table();
  out.text = "h-vector " + h.to_string() + "\n" + h.table() + "\ndegree " + std::to_string(degree(I)) +
             ", dim R/I " + std::to_string(krull_dim(I)) + ", Cohen-Macaulay: " + (cm.cohen_macaulay ? "yes" : "no") +
             "\n";
  return out;
}

Outcome cmd_link(const Options& o, std::uint64_t& seed, std::uint32_t& prime) {
  Json j = load(o);
  auto f = io::read_ideal_file(j, prime_flag(o));
  seed = pick_seed(o, f.seed);
  prime = f.ring->field().prime();
  if (!j.contains("link") || !j.at("link").is_object()) throw ParseError("missing object 'link'", 1, 1);
  const Json& l = j.at("link");
  std::string kind = l.value("kind", "ci");
  Outcome out;
  LinkStep step;
  if (kind == "ci") {
    step = ci_link(f.ideal, io::read_polynomials(f.ring, l, "generators"), Rng(seed));
  } else if (kind == "lemma") {
    auto fs = io::read_polynomials(f.ring, Json{{"f", Json::array({l.value("f", "")})}}, "f");
    Ideal J(f.ring, io::read_polynomials(f.ring, l, "J"));
    step = lemma_key_link(f.ideal, fs.at(0), J, Rng(seed));
    out.json["verdict"] = step.check("(I + fJ) : (I, f) = J") ? "identity holds" : "identity violated";
  } else {
    throw ParseError("link.kind must be \"ci\" or \"lemma\"", 1, 1);
  }
  out.json["step"] = io::to_json(step);
  out.text = io::to_text(step);
  if (out.json.contains("verdict")) out.text += "verdict: " + out.json["verdict"].get<std::string>() + "\n";
  out.ok = step.passed();
  return out;
}

Outcome cmd_fatpoints(const Options& o, std::uint64_t& seed, std::uint32_t& prime) {
  auto f = io::read_point_scheme(load(o), prime_flag(o));
  seed = pick_seed(o, f.seed);
  prime = f.ring->field().prime();
  DoubleStepOptions step;
  step.skip_redundant_r_forms = o.skip_redundant;
  Outcome out;
  LinkChainReport rep;
  if (o.focus >= 0) {
    auto res = theorem32_double_step(f.ring, f.scheme, static_cast<std::size_t>(o.focus), Rng(seed), step);
    rep = res.report;
    Json next = Json::array();
    for (const auto& p : res.next.points)
      next.push_back(Json{{"coords", p.point.to_string()}, {"mult", p.multiplicity}});
    out.json["next_is_fat_point_union"] = res.next_is_fat_point_union;
    if (res.next_is_fat_point_union) out.json["next_degree"] = res.next.degree();
  } else {
    ReduceOptions ro;
    ro.step = step;
    ro.max_scheme_degree = o.max_degree;
    rep = reduce_to_reduced(f.ring, f.scheme, Rng(seed), ro);
  }
  out.json["report"] = io::to_json(rep);
  out.text = io::to_text(rep);
  out.ok = rep.passed();
  return out;
}

Outcome cmd_lift(const Options& o, std::uint64_t& seed, std::uint32_t& prime) {
  auto f = io::read_ideal_file(load(o), prime_flag(o));
  seed = pick_seed(o, f.seed);
  prime = f.ring->field().prime();
  auto L = lift_ideal(io::read_monomial_ideal(f));
  auto cert = verify_lifting(L, Rng(seed), o.bound);
  Outcome out;
  Json gens = Json::array();
  for (const auto& g : L.J.generators()) gens.push_back(g.to_string());
  out.json["variables"] = L.S->names();
  out.json["lifted_generators"] = gens;
  out.json["certificate"] = io::to_json(cert);
  std::string text = "J = (";
  for (std::size_t i = 0; i < L.J.generators().size(); ++i) text += (i ? ", " : "") + L.J.generators()[i].to_string();
  text += ")\n";
  for (const auto& c : cert.checks)
    text += "[" + std::string(c.passed ? "ok" : "FAIL") + "] " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
  text += std::string("verdict: ") + (cert.passed() ? "lifting verified" : "lifting check failed");
  if (!cert.lift_cohen_macaulay && !cert.input_cohen_macaulay) text += " (S/J is not Cohen-Macaulay, as R/I is not)";
  text += "\n";
  out.text = text;
  out.ok = cert.passed();
  return out;
}

Outcome cmd_embed(const Options& o, std::uint64_t& seed, std::uint32_t& prime) {
  Json j = load(o);
  auto f = io::read_ideal_file(j, prime_flag(o));
  seed = pick_seed(o, f.seed);
  prime = f.ring->field().prime();
  std::optional<Ideal> witness;
  if (j.contains("witness")) {
    RingPtr S = embedded_ideal(f.ideal).ring();
    witness = Ideal(S, io::read_polynomials(S, j, "witness"));
  }
  std::size_t bound = o.bound ? o.bound : default_bound(f.ideal);
  auto res = embed_and_link(f.ideal, witness, Rng(seed), bound);
  Outcome out;
  out.json["embedded"] = io::to_json(summarize("(I S, t)", res.embedded));
  out.json["witness_source"] = res.witness_source;
  out.json["hilbert_function_preserved"] = res.hilbert_function_preserved;
  out.json["bound"] = res.bound;
  out.json["step"] = io::to_json(res.step);
  out.text = "witness: " + res.witness_source + "\n" + io::to_text(res.step);
  out.ok = res.step.passed() && res.hilbert_function_preserved;
  return out;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "input JSON file")->required();
  sub->add_option("--prime", o.prime, "field characteristic (overrides the file)");
  sub->add_option_function<std::uint64_t>(
      "--seed", [&o](const std::uint64_t& s) { o.seed = s, o.seed_set = true; }, "random seed (overrides the file)");
  sub->add_option("--bound", o.bound, "degree bound for Hilbert function comparisons (0: 2*maxdeg+4)");
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, "write the output here instead of stdout");
}

int emit(const Options& o, const std::string& command, std::uint64_t seed, std::uint32_t prime, const Outcome* res,
         const std::string& error_kind, const std::string& error) {
  std::string body;
  if (o.format == "text") {
    body = "command " + command + ", prime " + std::to_string(prime) + ", seed " + std::to_string(seed) + "\n";
    body += res ? res->text : "error (" + error_kind + "): " + error + "\n";
  } else {
    Json j;
    j["command"] = command;
    j["prime"] = prime;
    j["seed"] = seed;
    if (res) {
      for (auto it = res->json.begin(); it != res->json.end(); ++it) j[it.key()] = it.value();
      j["ok"] = res->ok;
    } else {
      j["error"] = Json{{"kind", error_kind}, {"message", error}};
    }
    body = j.dump(2) + "\n";
  }
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kConfig;
    }
    f << body;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein liaison toolkit over GF(p)"};
  app.require_subcommand(1);
  Options o;
  using Handler = Outcome (*)(const Options&, std::uint64_t&, std::uint32_t&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o);
    subs.emplace_back(s, h);
    return s;
  };
  add("hvector", "h-vector, degree, dimension and CM verdict of an ideal file", cmd_hvector);
  add("link", "complete intersection link or the key-link identity", cmd_link);
  CLI::App* fp = add("fatpoints", "link a union of fat points in P^3 to a reduced scheme", cmd_fatpoints);
  fp->add_option("--focus", o.focus, "run a single double step at this point index");
  fp->add_flag("--skip-redundant-forms", o.skip_redundant,
               "leave out forms through R_k when a reused plane of the same role already passes through it");
  fp->add_option("--max-degree", o.max_degree, "largest scheme degree a double step may start from");
  add("lift", "lift a monomial ideal to a reduced ideal in one more variable", cmd_lift);
  add("embed", "link (I S, t) to a Gorenstein witness", cmd_embed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  for (auto& [sub, handler] : subs) {
    if (!sub->parsed()) continue;
    std::string command = sub->get_name();
    std::uint64_t seed = o.seed_set ? o.seed : 1;
    std::uint32_t prime = o.prime ? o.prime : PrimeField::kDefaultPrime;
    auto fail = [&](int code, const char* kind, const std::exception& e) {
      std::cerr << "error (" << kind << "): " << e.what() << "\n";
      int w = emit(o, command, seed, prime, nullptr, kind, e.what());
      return w ? w : code;
    };
    try {
      Outcome res = handler(o, seed, prime);
      int w = emit(o, command, seed, prime, &res, "", "");
      if (w) return w;
      return res.ok ? kOk : kVerification;
    } catch (const ParseError& e) {
      return fail(kConfig, "parse", e);
    } catch (const VerificationError& e) {
      return fail(kVerification, "verification", e);
    } catch (const GenericityError& e) {
      return fail(kGenericity, "genericity", e);
    } catch (const ResourceLimitError& e) {
      return fail(kResource, "resource limit", e);
    } catch (const AlgebraError& e) {
      return fail(kConfig, "precondition", e);
    } catch (const Error& e) {
      return fail(kConfig, "error", e);
    }
  }
  return kConfig;
}
