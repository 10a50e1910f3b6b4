#pragma once

#include <cstdint>
#include <string>

#include "qshift/shift_matrix.hpp"
#include "qshift/uelement.hpp"

namespace qshift {

/// d_ij f with 0-based indices. On generators d_ij G is the (i,j) entry of
/// the transposed gl_N matrix of G; on products the quantum Leibniz rule
/// (minus correction for the standard kind, transposed plus correction for
/// the hat kind) applies. The hat kind exists only for gl_N.
UElement quasi_derive(const UElement& f, int i, int j, DerivationKind kind = DerivationKind::standard);

/// D_mu f = sum_ij mu_ij d_ji f.
UElement d_mu(const ShiftMatrix& mu, const UElement& f);
/// D_mu^p f; p = 0 returns f.
UElement d_mu_iterate(const ShiftMatrix& mu, const UElement& f, int p);
/// Same with the hat quasi-derivations (gl_N only).
UElement d_mu_hat(const ShiftMatrix& mu, const UElement& f);

/// The automorphism E_kl -> -E_lk of U(gl_N).
UElement transpose_automorphism(const UElement& f);

struct ConsistencyReport {
  int trials = 0;
  int violations = 0;
  /// Description of the first violation, empty when consistent.
  std::string witness;
};

/// Checks d_ij(fg) against the Leibniz expansion through d(f), d(g) for
/// random pairs and all (i, j).
ConsistencyReport leibniz_consistency_check(const AlgebraPtr& alg, int trials, std::uint64_t seed,
                                            DerivationKind kind = DerivationKind::standard);
/// The same for one explicit pair.
ConsistencyReport leibniz_consistency_check(const UElement& f, const UElement& g,
                                            DerivationKind kind = DerivationKind::standard);

}  // namespace qshift
