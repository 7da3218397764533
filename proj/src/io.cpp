#include "glink/io.hpp"

#include <fstream>
#include <sstream>

#include "glink/error.hpp"

namespace glink::io {

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// ParseError text without its " (line L, column C)" suffix.
std::string bare_message(const ParseError& e) {
  std::string s = e.what();
  auto pos = s.rfind(" (line ");
  return pos == std::string::npos ? s : s.substr(0, pos);
}

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg, 1, 1); }

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) bad("missing key '" + key + "'");
  return j.at(key);
}

std::optional<std::uint64_t> read_seed(const Json& j) {
  if (!j.contains("seed")) return std::nullopt;
  const Json& s = j.at("seed");
  if (!s.is_number_integer()) bad("seed must be an integer");
  return s.get<std::uint64_t>();
}

std::uint32_t read_prime(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 2 || j.get<std::int64_t>() > 0xFFFFFFFFll)
    bad("prime must be a positive integer");
  return static_cast<std::uint32_t>(j.get<std::int64_t>());
}

Json seeds_json(const std::vector<std::uint64_t>& seeds) {
  Json a = Json::array();
  for (auto s : seeds) a.push_back(s);
  return a;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    auto p = msg.find("syntax error");
    throw ParseError("invalid JSON: " + (p == std::string::npos ? msg : msg.substr(p)), line, col);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RingPtr read_ring(const Json& j, std::optional<std::uint32_t> prime) {
  const Json& vars = field(j, "vars");
  if (!vars.is_array() || vars.empty()) bad("ring.vars must be a nonempty array of names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) bad("ring.vars must contain strings");
    names.push_back(v.get<std::string>());
  }
  std::uint32_t p = PrimeField::kDefaultPrime;
  if (j.contains("prime")) p = read_prime(j.at("prime"));
  if (prime) p = *prime;
  MonomialOrder order = MonomialOrder::degrevlex();
  if (j.contains("order")) {
    if (!j.at("order").is_string()) bad("ring.order must be a string");
    try {
      order = MonomialOrder::parse(j.at("order").get<std::string>());
    } catch (const AlgebraError& e) {
      bad(std::string("ring.order: ") + e.what());
    }
  }
  try {
    return PolyRing::make(names, p, order);
  } catch (const AlgebraError& e) {
    bad(std::string("ring: ") + e.what());
  }
}

std::vector<Polynomial> read_polynomials(const RingPtr& ring, const Json& j, const std::string& key) {
  const Json& arr = field(j, key);
  if (!arr.is_array()) bad("'" + key + "' must be an array of polynomial strings");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) bad(key + "[" + std::to_string(i) + "] must be a string");
    try {
      out.push_back(parse_polynomial(ring, arr[i].get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(key + "[" + std::to_string(i) + "]: " + bare_message(e), e.line(), e.column());
    }
  }
  return out;
}

IdealFile read_ideal_file(const Json& j, std::optional<std::uint32_t> prime) {
  if (!j.is_object()) bad("ideal file must be a JSON object");
  RingPtr ring = read_ring(field(j, "ring"), prime);
  std::vector<Polynomial> gens;
  if (j.contains("generators")) gens = read_polynomials(ring, j, "generators");
  else if (!j.contains("exponents")) bad("missing key 'generators'");
  try {
    return {ring, Ideal(ring, std::move(gens)), read_seed(j), j};
  } catch (const AlgebraError& e) {
    bad(std::string("generators: ") + e.what());
  }
}

MonomialIdealInput read_monomial_ideal(const IdealFile& f) {
  std::vector<Monomial> gens;
  if (f.raw.contains("exponents")) {
    const Json& arr = f.raw.at("exponents");
    if (!arr.is_array()) bad("'exponents' must be an array of exponent vectors");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const Json& e = arr[i];
      if (!e.is_array() || e.size() != f.ring->nvars())
        bad("exponents[" + std::to_string(i) + "] must list " + std::to_string(f.ring->nvars()) + " exponents");
      std::vector<int> v;
      for (const auto& x : e) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 65535)
          bad("exponents[" + std::to_string(i) + "] must hold integers in 0..65535");
        v.push_back(static_cast<int>(x.get<std::int64_t>()));
      }
      gens.emplace_back(std::span<const int>(v));
    }
    for (const auto& g : f.ideal.generators()) {
      if (g.terms().size() != 1) bad("not a monomial: " + g.to_string());
      gens.push_back(g.leading_monomial());
    }
    return MonomialIdealInput::make(f.ring, std::move(gens));
  }
  try {
    return MonomialIdealInput::from_ideal(f.ideal);
  } catch (const AlgebraError& e) {
    bad(e.what());
  }
}

PointSchemeFile read_point_scheme(const Json& j, std::optional<std::uint32_t> prime) {
  if (!j.is_object()) bad("point-scheme file must be a JSON object");
  std::uint32_t p = PrimeField::kDefaultPrime;
  if (j.contains("prime")) p = read_prime(j.at("prime"));
  if (prime) p = *prime;
  RingPtr ring = p3_ring(p);
  const Json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) bad("'points' must be a nonempty array");
  FatPointScheme Z;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string where = "points[" + std::to_string(i) + "]";
    const Json& c = field(pts[i], "coords");
    if (!c.is_array() || c.size() != 4) bad(where + ".coords must hold 4 numbers");
    std::vector<std::int64_t> v;
    for (const auto& x : c) {
      if (!x.is_number_integer()) bad(where + ".coords must hold integers");
      v.push_back(x.get<std::int64_t>());
    }
    int mult = 1;
    if (pts[i].contains("mult")) {
      const Json& m = pts[i].at("mult");
      if (!m.is_number_integer() || m.get<std::int64_t>() < 1 || m.get<std::int64_t>() > 64)
        bad(where + ".mult must be an integer in 1..64");
      mult = static_cast<int>(m.get<std::int64_t>());
    }
    try {
      Z.points.push_back({PointP3::make(ring->field(), v), mult});
    } catch (const AlgebraError& e) {
      bad(where + ": " + e.what());
    }
  }
  try {
    Z.validate();
  } catch (const AlgebraError& e) {
    bad(e.what());
  }
  return {ring, Z, read_seed(j)};
}

Json to_json(const HVector& h) {
  Json a = Json::array();
  for (auto v : h.entries) a.push_back(v);
  return a;
}

Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const IdealSummary& s) {
  Json j;
  j["name"] = s.name;
  if (!s.generators.empty()) j["generators"] = s.generators;
  j["generator_degrees"] = s.generator_degrees;
  if (s.gb_size) j["gb_size"] = s.gb_size;
  j["dimension"] = s.dimension;
  if (s.degree) j["degree"] = *s.degree;
  if (s.h_vector) j["h_vector"] = to_json(*s.h_vector);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const LinkStep& s) {
  Json j;
  j["label"] = s.label;
  j["linking_kind"] = s.linking_kind;
  if (s.input) j["input"] = to_json(summarize("input", *s.input));
  if (s.linking_ideal) j["linking_ideal"] = to_json(summarize("linking", *s.linking_ideal));
  if (s.residual) j["residual"] = to_json(summarize("residual", *s.residual));
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  if (!s.gb_sizes.empty()) {
    Json g = Json::object();
    for (const auto& [k, v] : s.gb_sizes) g[k] = v;
    j["gb_sizes"] = g;
  }
  j["seeds"] = seeds_json(s.seeds);
  j["passed"] = s.passed();
  return j;
}

Json to_json(const LinkChainReport& r) {
  Json j;
  j["title"] = r.title;
  j["prime"] = r.prime;
  if (r.initial) j["initial"] = to_json(summarize("initial", *r.initial));
  Json objects = Json::array();
  for (const auto& o : r.objects) objects.push_back(to_json(o));
  j["objects"] = objects;
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  j["link_count"] = r.steps.size();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  if (r.final_ideal) j["final"] = to_json(summarize("final", *r.final_ideal, !r.final_ideal->is_unit()));
  j["narrative"] = r.narrative;
  j["seeds"] = seeds_json(r.seeds);
  j["passed"] = r.passed();
  return j;
}

Json to_json(const LiftingCertificate& c) {
  Json j;
  Json checks = Json::array();
  for (const auto& k : c.checks) checks.push_back(to_json(k));
  j["checks"] = checks;
  j["input_cohen_macaulay"] = c.input_cohen_macaulay;
  j["lift_cohen_macaulay"] = c.lift_cohen_macaulay;
  if (c.reduced) j["reduced"] = *c.reduced;
  j["bound"] = c.bound;
  j["seeds"] = seeds_json(c.seeds);
  j["passed"] = c.passed();
  return j;
}

namespace {

void summary_text(std::ostringstream& out, const IdealSummary& s) {
  out << "  " << s.name << ": dim " << s.dimension;
  if (s.degree) out << ", degree " << *s.degree;
  if (s.h_vector) out << ", h-vector " << s.h_vector->to_string();
  if (!s.generator_degrees.empty()) {
    out << ", generator degrees (";
    for (std::size_t i = 0; i < s.generator_degrees.size(); ++i) out << (i ? ", " : "") << s.generator_degrees[i];
    out << ")";
  }
  if (!s.note.empty()) out << " [" << s.note << "]";
  out << "\n";
}

}  // namespace

std::string to_text(const LinkStep& s) {
  std::ostringstream out;
  out << "link " << s.label << " (" << s.linking_kind << ")\n";
  if (s.input) summary_text(out, summarize("input", *s.input));
  if (s.linking_ideal) summary_text(out, summarize("linking", *s.linking_ideal));
  if (s.residual) summary_text(out, summarize("residual", *s.residual));
  for (const auto& c : s.checks)
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return out.str();
}

std::string to_text(const LinkChainReport& r) {
  std::ostringstream out;
  out << r.title << "\n";
  out << "prime " << r.prime << ", seeds";
  for (auto s : r.seeds) out << " " << s;
  out << "\n";
  if (!r.objects.empty()) {
    out << "objects:\n";
    for (const auto& o : r.objects) summary_text(out, o);
  }
  for (const auto& s : r.steps) out << to_text(s);
  for (const auto& c : r.checks)
    out << "[" << (c.passed ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  for (const auto& n : r.narrative) out << n << "\n";
  out << "links: " << r.steps.size() << "\n";
  out << "verdict: " << (r.passed() ? "all checks passed" : "some checks failed") << "\n";
  return out.str();
}

}  // namespace glink::io
