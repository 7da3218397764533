#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "glink/field.hpp"
#include "glink/monomial.hpp"
#include "glink/order.hpp"

namespace glink {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Graded polynomial ring GF(p)[vars] with a fixed monomial order.
///
/// Every variable carries a grading weight, 1 by default. The auxiliary variable used for
/// intersections gets weight 0 so that u*f and (1-u)*g stay homogeneous.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, std::uint32_t prime = PrimeField::kDefaultPrime,
           MonomialOrder order = MonomialOrder::degrevlex(),
           std::vector<std::uint32_t> weights = {});

  static RingPtr make(std::vector<std::string> names,
                      std::uint32_t prime = PrimeField::kDefaultPrime,
                      MonomialOrder order = MonomialOrder::degrevlex(),
                      std::vector<std::uint32_t> weights = {});

  // x0..x{n-1}
  static RingPtr standard(std::size_t nvars, std::uint32_t prime = PrimeField::kDefaultPrime,
                          const std::string& prefix = "x");

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  bool standard_grading() const;

  // Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  std::uint64_t weighted_degree(const Monomial& m) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) d += std::uint64_t{weights_[i]} * m[i];
    return d;
  }

  // Same ring with one more variable appended (weight 1, same order kind).
  RingPtr extend(const std::string& name) const;
  // Ring with `name` prepended and an elimination order on it; used for elimination tricks.
  RingPtr with_leading_aux(const std::string& name, std::uint32_t weight) const;
  RingPtr without_variable(std::size_t index) const;
  RingPtr with_order(MonomialOrder order) const;

  std::string fresh_name(const std::string& stem) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.field_ == b.field_ && a.order_ == b.order_ &&
           a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
  std::vector<std::uint32_t> weights_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what);

}  // namespace glink
