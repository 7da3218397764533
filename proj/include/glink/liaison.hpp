#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glink/toolbox.hpp"

namespace glink {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Printable snapshot of an ideal. Generators are omitted for very large ideals; their
/// degrees are always kept.
struct IdealSummary {
  std::string name;
  std::vector<std::string> generators;
  std::vector<int> generator_degrees;
  std::size_t gb_size = 0;
  int dimension = 0;
  std::optional<std::int64_t> degree;
  std::optional<HVector> h_vector;
  std::string note;
};

IdealSummary summarize(const std::string& name, const Ideal& I, bool with_h_vector = true);

struct LinkStep {
  std::string label;         // "Z -> Z'"
  std::string linking_kind;  // "complete intersection" or "gorenstein (certified: necessary conditions)"
  std::optional<Ideal> linking_ideal;
  std::optional<Ideal> input;
  std::optional<Ideal> residual;
  std::vector<Check> checks;
  std::vector<std::uint64_t> seeds;
  std::map<std::string, std::size_t> gb_sizes;

  bool passed() const;
  // Outcome of the named check; throws if absent.
  bool check(const std::string& name) const;
  void add(std::string name, bool ok, std::string detail = {});
};

struct LinkChainReport {
  std::string title;
  std::optional<Ideal> initial;
  std::optional<Ideal> final_ideal;
  std::vector<LinkStep> steps;
  std::vector<IdealSummary> objects;  // named intermediate objects in construction order
  std::vector<Check> checks;          // chain-level verifications
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> narrative;
  std::uint64_t prime = 0;

  bool passed() const;
  std::vector<bool> verdicts() const;
  bool check(const std::string& name) const;
  void add(std::string name, bool ok, std::string detail = {});
  void append(const LinkChainReport& other);
};

struct LinkOptions {
  bool check_cm = true;
};

/// Direct link of I by the complete intersection generated by ci_gens.
LinkStep ci_link(const Ideal& I, const std::vector<Polynomial>& ci_gens, const Rng& rng,
                 LinkOptions options = {});

/// True when I and W share no component (codim(I + W) > codim(I)).
bool is_geometric_link(const Ideal& I, const Ideal& c, const Ideal& W);

/// c : (c : I) == I.
bool link_involution_check(const Ideal& I, const Ideal& c);

struct GorensteinCertificate {
  bool codim_ok = false;
  bool cohen_macaulay = false;
  bool symmetric = false;
  HVector h_vector;
  std::vector<std::uint64_t> seeds;
  bool passed() const { return codim_ok && cohen_macaulay && symmetric; }
};

struct GorensteinSum {
  Ideal ideal;
  GorensteinCertificate certificate;
};

/// Saturated sum of two geometrically linked ideals.
GorensteinSum gorenstein_sum(const Ideal& Y, const Ideal& W, const Ideal& c, const Rng& rng);

/// Necessary conditions for R/J to be Gorenstein of the given codimension.
GorensteinCertificate certify_gorenstein(const Ideal& J, int expected_codim, const Rng& rng);

/// Links (I, f) to J through G = I + f J and checks (I + f J) : (I, f) = J.
LinkStep lemma_key_link(const Ideal& I, const Polynomial& f, const Ideal& J, const Rng& rng);

/// (I S, t) in S = R[t]; the ring gains a variable named "t" (or a fresh name).
Ideal embedded_ideal(const Ideal& I);

struct EmbedResult {
  LinkStep step;
  Ideal embedded;           // (I S, t)
  std::string witness_source;
  bool hilbert_function_preserved = false;
  std::size_t bound = 0;
};

/// Links (I S, t) to a Gorenstein witness J in S. Without a witness, one is built only when I
/// is a complete intersection.
EmbedResult embed_and_link(const Ideal& I, const std::optional<Ideal>& witness, const Rng& rng,
                           std::size_t bound);

/// Iterated key links from I_{V1} through (I_{V1}, f_1, ..., f_k). Witnesses are built for
/// complete intersections; `witnesses[k]` overrides step k.
LinkChainReport proper_ci_intersection_link(const Ideal& V1, const std::vector<Polynomial>& ci_gens,
                                            const Rng& rng,
                                            const std::map<std::size_t, Ideal>& witnesses = {});

// ---- helpers shared with the constructors ----
std::vector<Polynomial> minimal_generators(const Ideal& I);
bool is_complete_intersection(const Ideal& I);
std::size_t default_bound(const Ideal& I);

}  // namespace glink
