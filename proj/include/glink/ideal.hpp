#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "glink/groebner.hpp"

namespace glink {

/// Immutable homogeneous ideal. The reduced Groebner basis and the Hilbert numerator are
/// computed on first use and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  // Throws AlgebraError if a generator is not homogeneous for the ring's grading.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  // Builds an ideal whose generators are known to be its reduced Groebner basis.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis);
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner_basis() const;
  // Coefficients of N(z) with HilbertSeries(R/I) = N(z) / (1-z)^nvars.
  const std::vector<std::int64_t>& hilbert_numerator() const;

  bool is_unit() const;
  bool is_zero() const { return groebner_basis().empty(); }

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  // Equality of ideals (reduced Groebner bases agree).
  friend bool operator==(const Ideal& a, const Ideal& b);

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag gb_once;
    std::vector<Polynomial> gb;
    std::once_flag hs_once;
    std::vector<std::int64_t> numerator;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Finite integer sequence; the h-vector of an arithmetically Cohen-Macaulay scheme.
struct HVector {
  std::vector<std::int64_t> entries;
  // Set when some entry is negative: the input was not ACM or not saturated.
  bool has_negative = false;

  std::int64_t sum() const;
  bool symmetric() const;
  std::string to_string() const;  // "(1, 3, 1)"
  // Two aligned rows: "deg" and "h-vector".
  std::string table() const;

  friend bool operator==(const HVector& a, const HVector& b) { return a.entries == b.entries; }
};

HVector make_hvector(std::vector<std::int64_t> entries);

}  // namespace glink
