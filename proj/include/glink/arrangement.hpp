#pragma once

#include <array>
#include <optional>
#include <vector>

#include "glink/toolbox.hpp"

namespace glink {

// Plane of P^3 by its coefficient vector.
using Plane = std::array<FieldElement, 4>;

Plane plane_of(const Polynomial& linear_form);
Polynomial plane_form(const RingPtr& ring, const Plane& p);
bool plane_contains_point(const PrimeField& field, const Plane& p, const Point& q);

/// Line of P^3 cut out by two independent planes.
class Line {
 public:
  Line(const PrimeField& field, const Plane& u, const Plane& v);

  const Plane& u() const { return u_; }
  const Plane& v() const { return v_; }
  // 2x2 minors of [u; v] over the column pairs 01 02 03 12 13 23.
  const std::array<FieldElement, 6>& minors() const { return minors_; }
  // Reduced row echelon form of [u; v]; equal lines have equal keys.
  const std::array<std::uint32_t, 8>& key() const { return key_; }

  bool contains(const PrimeField& field, const Point& q) const;
  Ideal ideal(const RingPtr& ring) const;

 private:
  Plane u_, v_;
  std::array<FieldElement, 6> minors_;
  std::array<std::uint32_t, 8> key_;
};

bool lines_meet(const PrimeField& field, const Line& a, const Line& b);
// Common point of two distinct coplanar lines.
std::optional<Point> meeting_point(const PrimeField& field, const Line& a, const Line& b);
bool plane_contains_line(const PrimeField& field, const Plane& p, const Line& l);

struct Incidence {
  Point point;
  std::vector<std::size_t> first;   // lines of the first family through the point
  std::vector<std::size_t> second;  // lines of the second family through the point
};

/// Every point where a line of `first` meets a line of `second`, sorted by coordinates.
std::vector<Incidence> incidences(const PrimeField& field, const std::vector<Line>& first,
                                  const std::vector<Line>& second);

/// Pairs (i, j), i < j, of equal lines.
std::vector<std::pair<std::size_t, std::size_t>> duplicate_lines(const std::vector<Line>& lines);

/// Ideal of a union of lines (intersection of the line ideals).
Ideal union_of_lines(const RingPtr& ring, const std::vector<Line>& lines);

}  // namespace glink
