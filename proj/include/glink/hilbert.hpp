#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "glink/monomial.hpp"

namespace glink {

// Numerator N(z) of the Hilbert series of K[x_0..x_{n-1}]/M, M generated by `gens`,
// computed by pivot recursion: N(M) = N(M + (p)) + z^deg(p) N(M : p).
std::vector<std::int64_t> monomial_hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

// Numerator divided by (1-z) as often as it vanishes at z = 1; returns the number of
// divisions performed alongside the quotient.
std::pair<std::vector<std::int64_t>, std::size_t> reduce_numerator(std::vector<std::int64_t> numerator);

// Coefficients 0..bound of N(z) / (1-z)^k.
std::vector<std::int64_t> series_coefficients(std::span<const std::int64_t> numerator, std::size_t k,
                                              std::size_t bound);

}  // namespace glink
