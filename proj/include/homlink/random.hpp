#pragma once

#include <cstdint>
#include <vector>

#include "homlink/polynomial.hpp"

namespace homlink {

/// Homogeneous form of degree d with independent uniform coefficients on
/// every monomial; a pure function of (ring, d, seed). Never returns zero.
/// Throws std::logic_error over the rationals.
Polynomial random_form(const RingPtr& ring, int degree, std::uint64_t seed);

/// Random k-linear combination of `basis` (nonzero unless the basis is empty).
/// Over the rationals coefficients are small integers in [-bound, bound].
Polynomial random_combination(const RingPtr& ring, const std::vector<Polynomial>& basis,
                              std::uint64_t seed, int rational_bound = 7);

}  // namespace homlink
