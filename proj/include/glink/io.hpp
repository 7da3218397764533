#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "glink/fatpoints.hpp"
#include "glink/lifting.hpp"

namespace glink::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);

/// {"vars": [...], "prime": p, "order": "degrevlex"}; `prime` overrides the file.
RingPtr read_ring(const Json& j, std::optional<std::uint32_t> prime);
/// Polynomial strings of the array `key` of j, reported as key[i] on parse errors.
std::vector<Polynomial> read_polynomials(const RingPtr& ring, const Json& j, const std::string& key);

/// Ideal file: {"ring": {...}, "generators": [...], "seed": s}.
struct IdealFile {
  RingPtr ring;
  Ideal ideal;
  std::optional<std::uint64_t> seed;
  Json raw;
};
IdealFile read_ideal_file(const Json& j, std::optional<std::uint32_t> prime);

/// Monomial ideal: generators as polynomial strings or "exponents": [[a0, a1, ...], ...].
MonomialIdealInput read_monomial_ideal(const IdealFile& f);

/// Point-scheme file: {"points": [{"coords": [..4..], "mult": k}], "seed": s, "prime": p}.
struct PointSchemeFile {
  RingPtr ring;
  FatPointScheme scheme;
  std::optional<std::uint64_t> seed;
};
PointSchemeFile read_point_scheme(const Json& j, std::optional<std::uint32_t> prime);

Json to_json(const HVector& h);
Json to_json(const Check& c);
Json to_json(const IdealSummary& s);
Json to_json(const LinkStep& s);
Json to_json(const LinkChainReport& r);
Json to_json(const LiftingCertificate& c);

/// Text narrative of a chain: objects in construction order, then each link with its checks.
std::string to_text(const LinkChainReport& r);
std::string to_text(const LinkStep& s);

}  // namespace glink::io
