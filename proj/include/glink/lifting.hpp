#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glink/liaison.hpp"

namespace glink {

/// Monomial ideal given by a minimal set of monomial generators.
struct MonomialIdealInput {
  RingPtr ring;
  std::vector<Monomial> generators;

  // Drops generators divisible by another one and sorts the rest in the ring order.
  static MonomialIdealInput make(RingPtr ring, std::vector<Monomial> generators);
  // Every generator must be a single term.
  static MonomialIdealInput from_ideal(const Ideal& I);

  Ideal ideal() const;
  std::uint32_t max_exponent() const;
};

/// x_i^a -> x_i (x_i - t) ... (x_i - (a-1) t) for every variable of m, with t at `t_index` of S.
/// The variables of m are the first ones of S.
Polynomial lift_monomial(const RingPtr& S, const Monomial& m, std::size_t t_index);

struct Lifting {
  MonomialIdealInput input;
  RingPtr S;          // input ring with t appended
  std::string t;      // name of the new variable
  Ideal J;
};

/// Lifts every generator. Requires p > the largest exponent.
Lifting lift_ideal(const MonomialIdealInput& I);

struct LiftingCertificate {
  std::vector<Check> checks;
  bool input_cohen_macaulay = false;
  bool lift_cohen_macaulay = false;
  std::optional<bool> reduced;  // set when S/J has dimension 1
  std::size_t bound = 0;
  std::vector<std::uint64_t> seeds;

  // All checks hold, except that S/J may fail to be Cohen-Macaulay when R/I is not.
  bool passed() const;
  bool check(const std::string& name) const;
};

/// J : t = J, (J, t) = (I S, t), equal Hilbert functions up to `bound`, the CM test and,
/// for a set of points, reducedness. bound 0 picks 2 * (max generator degree) + 4.
LiftingCertificate verify_lifting(const Lifting& L, const Rng& rng, std::size_t bound = 0);

}  // namespace glink
