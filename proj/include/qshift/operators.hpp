#pragma once

#include <vector>

#include "qshift/tensor.hpp"

namespace qshift {

/// Anti-symmetrizer on the listed slots of a tensor with `slots` slots, built
/// by the recursion A^(k) = (1/k)(1 - P_{s1 sk} - ... - P_{s(k-1) sk}) A^(k-1).
Tensor antisymmetrizer(const AlgebraPtr& alg, int slots, const std::vector<int>& on);
/// Symmetrizer on the listed slots (same recursion with plus signs).
Tensor symmetrizer(const AlgebraPtr& alg, int slots, const std::vector<int>& on);
/// A^(m) and H^(m) on slots 0..m-1 of an m-slot tensor.
Tensor antisymmetrizer(const AlgebraPtr& alg, int m);
Tensor symmetrizer(const AlgebraPtr& alg, int m);

/// omega = N (orthogonal) or -2n (symplectic).
Scalar brauer_omega(const LieAlgebra& alg);
/// gamma_m(omega) = (omega + m - 2) / (omega + 2m - 2).
Scalar brauer_gamma(const LieAlgebra& alg, int m);

enum class SymplecticQSign {
  idempotent,  ///< -Q_ab/(n-b+a+1): the idempotent normalization
  literal,     ///< +Q_ab/(n-b+a+1): kept to exhibit its failure
};

/// Brauer symmetrizer S^(m) on slots 0..m-1 of an m-slot tensor:
/// (1/m!) prod over pairs a<b in lexicographic order of
///   (1 + P_ab/(b-a) - Q_ab/(N/2+b-a-1))   orthogonal
///   (1 - P_ab/(b-a) - Q_ab/(n-b+a+1))     symplectic
/// The symplectic product is defined only for m <= n.
Tensor brauer_symmetrizer(const AlgebraPtr& alg, int m, SymplecticQSign sign = SymplecticQSign::idempotent);

}  // namespace qshift
