#pragma once

#include <string>
#include <vector>

#include "qshift/shift_matrix.hpp"
#include "qshift/tensor.hpp"

namespace qshift {

/// tr F^p (tr E^p for gl_N); p = 0 gives N.
UElement trace_power(const AlgebraPtr& alg, int p);
/// tr M F^p for a constant N x N matrix M (row-major).
UElement trace_matrix_power(const AlgebraPtr& alg, const std::vector<Scalar>& m, int p);

/// tr_{1..m} F_1^{p_1} ... F_m^{p_m} = tr F^{p_1} ... tr F^{p_m}.
UElement gelfand_generator(const AlgebraPtr& alg, const std::vector<int>& powers);

/// phi^(k)_m = tr_{1..m} X^(m) mu_1 ... mu_k F_{k+1} ... F_m with
///   X = A^(m)              for gl_N and for sp_N (all m <= 2n)
///   X = gamma_m S^(m)      for o_N in either presentation
UElement phi(const ShiftMatrix& mu, int m, int k);
/// The Brauer-symmetrizer form gamma_m S^(m) for o_N and for sp_N with m <= n.
UElement phi_brauer(const ShiftMatrix& mu, int m, int k);
/// psi^(k)_m = tr_{1..m} H^(m) mu_1 ... mu_k E_{k+1} ... E_m (gl_N only).
UElement psi(const ShiftMatrix& mu, int m, int k);

/// Pf F: signed sum over perfect matchings for canonical o_2n, and
/// (1/(2^n n!)) sum_s sgn s F_{s(1) s(2)'} ... F_{s(2n-1) s(2n)'} for split o_2n.
UElement pfaffian(const AlgebraPtr& alg);
/// Coefficients pi_(0), ..., pi_(n) of Pf(mu + F z^{-1}) at z^{-n}, ..., z^0
/// (canonical o_2n); pi_(0) = Pf F and pi_(n) = Pf mu.
std::vector<UElement> pf_shift_coeffs(const ShiftMatrix& mu);
/// The matrix [d_ij Pf F].
UMatrix pfaffian_derivative_matrix(const AlgebraPtr& alg);

/// T_i = sum_{k != i} F_ik F_ki / (mu_i - mu_k) for a generic diagonal mu;
/// i ranges over 0..N-1 for gl_N and 0..n-1 otherwise.
UElement t_element(const ShiftMatrix& mu, int i);
/// Number of T_i elements used by the commutant criterion.
int t_element_count(const LieAlgebra& alg);

struct FamilyLabel {
  std::string kind;  ///< "dmu-iterate", "pi", "phi" or "psi"
  int m = 0;
  int k_or_p = 0;
  std::string to_string() const;
};

struct FamilyMember {
  FamilyLabel label;
  UElement element;
};

struct GeneratorFamily {
  AlgebraPtr algebra;
  std::vector<FamilyMember> members;
};

/// The D_mu-iterate families of the generation theorems:
///   gl_N       D^p phi^(0)_m, m = 1..N, p < m
///   o_{2n+1}, sp_2n   D^p phi^(0)_m, m = 2, 4, ..., 2n, p < m
///   o_2n       D^p phi^(0)_m, m = 2, ..., 2n-2, p < m, and D^p Pf F, p < n
GeneratorFamily amu_generating_family(const ShiftMatrix& mu);

/// phi^(k)_m (or psi) for all 0 <= k <= m <= max_m as a labelled family.
GeneratorFamily phi_family(const ShiftMatrix& mu, int max_m, bool use_psi = false);

/// JSON array [{"label": {"kind", "m", "k_or_p"}, "element": str}].
std::string family_to_json(const GeneratorFamily& family);

}  // namespace qshift
