#pragma once

#include <vector>

#include "glink/field.hpp"

namespace glink {

using Matrix = std::vector<std::vector<FieldElement>>;
// Univariate polynomial, coefficient of z^i at index i.
using UPoly = std::vector<FieldElement>;

// Characteristic polynomial det(zI - A) via reduction to Hessenberg form.
UPoly characteristic_polynomial(Matrix a, const PrimeField& field);
UPoly upoly_derivative(const UPoly& f, const PrimeField& field);
UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& field);
bool upoly_squarefree(const UPoly& f, const PrimeField& field);
FieldElement upoly_eval(const UPoly& f, FieldElement x, const PrimeField& field);

// Rank of a matrix over GF(p).
std::size_t matrix_rank(Matrix a, const PrimeField& field);
// Basis of the right kernel {v : A v = 0}.
std::vector<std::vector<FieldElement>> kernel_basis(Matrix a, std::size_t ncols, const PrimeField& field);

}  // namespace glink
