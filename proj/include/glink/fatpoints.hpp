#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glink/arrangement.hpp"
#include "glink/liaison.hpp"

namespace glink {

struct PointP3 {
  Point coords;  // first nonzero coordinate is 1

  static PointP3 make(const PrimeField& field, const std::vector<std::int64_t>& coords);
  static PointP3 make(const PrimeField& field, Point coords);
  std::string to_string() const;  // "[1:0:0:0]"
  friend bool operator==(const PointP3&, const PointP3&) = default;
};

struct FatPoint {
  PointP3 point;
  int multiplicity = 1;
};

struct FatPointScheme {
  std::vector<FatPoint> points;

  // Sum of C(b + 2, 3) over the points.
  std::int64_t degree() const;
  bool reduced() const;
  // Throws AlgebraError on an empty scheme, repeated points or multiplicity < 1.
  void validate() const;
};

RingPtr p3_ring(std::uint32_t prime = PrimeField::kDefaultPrime);

Ideal point_ideal(const RingPtr& ring, const PointP3& P);
Ideal fat_point_ideal(const RingPtr& ring, const PointP3& P, int k);
Ideal union_ideal(const RingPtr& ring, const FatPointScheme& Z);

/// Random combinations of the linear forms vanishing at P, pairwise non-proportional.
std::vector<Polynomial> general_forms_through(const RingPtr& ring, const PointP3& P, std::size_t count,
                                              Rng& rng);

struct GridCurveSelection {
  std::vector<Polynomial> a_forms;
  std::vector<Polynomial> b_forms;
  std::vector<std::pair<std::size_t, std::size_t>> selected;
  std::vector<std::pair<std::size_t, std::size_t>> complement;
  std::vector<Line> c_lines;
  std::vector<Line> d_lines;
  Ideal ic;
  Ideal id;
  HVector hc;
  HVector hd;
  std::size_t attempts = 0;
  std::vector<std::uint64_t> seeds;

  Polynomial A() const;
  Polynomial B() const;
};

/// The lines A_i ∩ B_j through P for na A-forms and nb = na ± 1 B-forms. C takes j <= i when
/// nb = na + 1 and j < i when nb = na - 1, D the rest. Both must have h-vector (1, 2, ..., m)
/// with m = min(na, nb), lie in p^m and meet in (A, B); otherwise fresh forms are drawn.
GridCurveSelection grid_curves(const RingPtr& ring, const PointP3& P, int na, int nb, const Rng& rng);
inline GridCurveSelection grid_curves(const RingPtr& ring, const PointP3& P, int a, const Rng& rng) {
  return grid_curves(ring, P, a, a + 1, rng);
}

/// One link p^a -> p^(a-1) through the Gorenstein scheme I_C + I_D.
LinkChainReport single_fatpoint_link_step(const RingPtr& ring, const PointP3& P, int a, const Rng& rng);
/// Links p^a -> p^(a-1) -> ... -> p.
LinkChainReport single_fatpoint_chain(const RingPtr& ring, const PointP3& P, int a, const Rng& rng);

struct DoubleStepOptions {
  enum class Mode { automatic, global, local };
  // How Y', W', Gor' and Z'' are handled: as global ideals, through the local structure of the
  // line arrangement, or global only while the second complete intersection has at most
  // `global_line_limit` lines. The local analysis always runs.
  Mode second_link = Mode::automatic;
  std::size_t global_line_limit = 60;
  int genericity_retries = 3;
  // At each R_k the second link adds L'_k, M'_k and N'_k. When set, a form is left out if a
  // plane of the same role (from F', from Q', or from G' outside Q') already passes through R_k.
  bool skip_redundant_r_forms = false;
};

struct DoubleStepResult {
  LinkChainReport report;
  // Z'' as a union of fat points; meaningful when `next_is_fat_point_union`.
  FatPointScheme next;
  bool next_is_fat_point_union = false;
  bool second_link_global = false;
  std::optional<Ideal> z2;
  std::vector<PointP3> r_points;
};

/// Two Gorenstein links reducing the multiplicity at `focus` by two.
DoubleStepResult theorem32_double_step(const RingPtr& ring, const FatPointScheme& Z, std::size_t focus,
                                       const Rng& rng, DoubleStepOptions options = {});

struct ReduceOptions {
  DoubleStepOptions step;
  // Guard on the next double step: degree of the scheme and lines in Y.
  std::int64_t max_scheme_degree = 200;
  std::int64_t max_first_link_lines = 200;
  // A final scheme known only componentwise is formed as a global ideal up to this degree.
  std::int64_t max_global_points = 40;
};

/// Repeats the double step at each non-reduced point until the scheme is reduced.
/// Throws ResourceLimitError when the next step exceeds the configured limits.
LinkChainReport reduce_to_reduced(const RingPtr& ring, const FatPointScheme& Z, const Rng& rng,
                                  ReduceOptions options = {});

// (1, n, C(n+1, 2), ..., C(n+a-2, a-1))
HVector fatpoint_hvector_formula(int n, int a);
// (1, n, ..., C(n+a-2, a-1), ..., n, 1), symmetric of length 2a - 1
HVector gorenstein_X_hvector_formula(int n, int a);

}  // namespace glink
