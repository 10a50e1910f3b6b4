#pragma once

#include <cstdint>
#include <random>

#include "qshift/shift_matrix.hpp"
#include "qshift/uelement.hpp"

namespace qshift {

using Rng = std::mt19937_64;

/// Random element with up to max_terms products of random (unordered) words
/// of length <= max_degree, small nonzero integer coefficients.
UElement random_element(const AlgebraPtr& alg, Rng& rng, int max_terms, int max_degree);

/// Random mu with small integer entries, satisfying the symmetry of the type.
ShiftMatrix random_shift_matrix(const AlgebraPtr& alg, Rng& rng);

}  // namespace qshift
