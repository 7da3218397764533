#pragma once

#include <span>
#include <vector>

#include "glink/polynomial.hpp"

namespace glink {

/// Division remainder of f by the listed divisors. The largest reducible term is always
/// reduced first, by the first divisor (in list order) whose leading monomial divides it,
/// so the result is a deterministic function of f and the list.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// Reduced Groebner basis (monic, inter-reduced, ascending by leading monomial) of the
/// ideal generated by `gens` with respect to their ring's order. Zero generators are
/// dropped; the unit ideal gives {1}; the zero ideal gives {}.
///
/// Buchberger's algorithm with the Gebauer-Moeller installation of the product and chain
/// criteria; pairs are processed by increasing sugar degree, which for homogeneous input is
/// degree by degree.
std::vector<Polynomial> groebner(std::span<const Polynomial> gens);

bool is_groebner_basis(std::span<const Polynomial> basis);

}  // namespace glink
