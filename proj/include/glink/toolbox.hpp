#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glink/ideal.hpp"
#include "glink/random.hpp"

namespace glink {

using Point = std::vector<FieldElement>;

// ---- generator-level operations ----

bool membership(const Polynomial& f, const Ideal& I);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& extra);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal scale_ideal(const Polynomial& f, const Ideal& I);  // f*I
Ideal principal(const Polynomial& f);

// ---- elimination-based operations ----

/// I ∩ J through u*I + (1-u)*J in a ring with an extra weight-0 variable u, followed by
/// elimination of u.
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect_all(const std::vector<Ideal>& ideals);

/// {g : g*f ∈ I}. Linear forms take a coordinate change plus the revlex colon property;
/// other divisors go through I ∩ (f).
Ideal quotient(const Ideal& I, const Polynomial& f);
/// Intersection of the quotients by the generators of J.
Ideal quotient(const Ideal& I, const Ideal& J);

/// Stable value of I : f^k.
Ideal saturate(const Ideal& I, const Polynomial& f);
Ideal saturate(const Ideal& I, const Ideal& J);

Ideal irrelevant_ideal(const RingPtr& ring);
Ideal saturate_irrelevant(const Ideal& I);
bool is_saturated(const Ideal& I);

/// I ∩ K[remaining variables], returned in the ring without `vars`.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars);

// ---- Hilbert data ----

std::vector<std::int64_t> hilbert_numerator(const Ideal& I);
std::int64_t hilbert_function(const Ideal& I, std::size_t d);
// Krull dimension of R/I; the unit ideal reports 0.
int krull_dim(const Ideal& I);
int codim(const Ideal& I);
// Throws AlgebraError("unit ideal has no scheme") for the unit ideal.
std::int64_t degree(const Ideal& I);
HVector h_vector(const Ideal& I);

// ---- structure tests ----

bool is_regular_element(const Ideal& I, const Polynomial& f);

struct CmCertificate {
  bool cohen_macaulay = false;
  int dimension = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::vector<Polynomial>> forms;  // one list per attempt
};

/// Graded CM test: a general linear system of parameters must be a regular sequence.
/// Up to three attempts with fresh seeds before answering false.
CmCertificate cm_test(const Ideal& I, const Rng& rng);

struct ReducednessCertificate {
  bool reduced = false;
  std::int64_t degree = 0;
  std::size_t algebra_dimension = 0;
  std::vector<std::uint64_t> seeds;
};

/// For a zero-dimensional subscheme (dim R/I = 1): dehomogenize at a random hyperplane and
/// check that multiplication by a random linear element has a squarefree characteristic
/// polynomial of degree deg(I).
ReducednessCertificate is_reduced_zero_dim(const Ideal& I, const Rng& rng);

/// Saturation of I by a product of random linear forms, one through each point in `others`,
/// none vanishing at P. Supplying every other support point isolates the P-primary part.
Ideal component_at_point(const Ideal& I, const Point& P, const std::vector<Point>& others,
                         const Rng& rng);

// ---- ring changes ----

Ideal extend_ring(const Ideal& I, const std::string& name);
Ideal contract_set_zero(const Ideal& I, const std::string& var);
// Same generators moved into a ring with identical variables but a different order.
Ideal change_order(const Ideal& I, const RingPtr& target);

// ---- points and linear forms ----

Point normalize_point(Point p, const PrimeField& field);
bool same_point(const Point& a, const Point& b, const PrimeField& field);
std::vector<Polynomial> linear_forms_through(const RingPtr& ring, const Point& p);
Ideal point_ideal(const RingPtr& ring, const Point& p);
Polynomial random_linear_form(const RingPtr& ring, Rng& rng);
Polynomial random_linear_form_through(const RingPtr& ring, const Point& p, Rng& rng);
// Exact division; throws if f does not divide g.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

}  // namespace glink
