#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qshift/lie_algebra.hpp"

namespace qshift {

/// The shift datum mu as an N x N rational matrix with mu_ij = mu(F_ij).
///
/// For the orthogonal and symplectic families the entries must satisfy
/// mu_ij = -theta_ij mu_{j'i'}; for gl_N any matrix is allowed. The check is
/// exact on the rationals and runs on construction.
class ShiftMatrix {
 public:
  ShiftMatrix(AlgebraPtr alg, std::vector<Scalar> entries);
  static ShiftMatrix zero(AlgebraPtr alg);
  static ShiftMatrix diagonal(AlgebraPtr alg, const std::vector<Scalar>& diag);

  /// Distinct, nonzero eigenvalue parameters:
  ///   gl_N           diag(1, 2, ..., N)
  ///   split o_N/sp_N diag(1, ..., n, [0,] -n, ..., -1)
  ///   canonical o_2n mu_{2k-1,2k} = -mu_{2k,2k-1} = k
  static ShiftMatrix generic(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  int N() const { return alg_->N(); }
  const Scalar& operator()(int i, int j) const { return entries_[i * N() + j]; }
  bool is_diagonal() const;
  /// mu evaluated on a canonical generator.
  Scalar on_generator(GenId g) const;
  /// Frobenius pairing sum_ij mu_ij M_ij with a generator's gl_N matrix; this
  /// is the value of D_mu on that generator.
  Scalar pair_with(GenId g) const;
  /// Row-major entries; products such as mu^2 leave the algebra's dual, so
  /// they are handled as plain matrices.
  const std::vector<Scalar>& entries() const { return entries_; }

  /// Throws Error unless mu is diagonal with the distinctness (and, for the
  /// forms, nonvanishing) required by the commutant membership criterion.
  void require_generic_diagonal() const;

 private:
  AlgebraPtr alg_;
  std::vector<Scalar> entries_;
};

/// JSON object {"family": str, "N": int, "entries": [["p/q", ...], ...]}.
ShiftMatrix parse_shift_matrix_json(std::string_view json_text);
std::string shift_matrix_to_json(const ShiftMatrix& mu);

}  // namespace qshift
