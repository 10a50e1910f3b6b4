#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qshift/tensor.hpp"
#include "qshift/verify.hpp"

namespace qshift::detail {

struct Outcome {
  std::optional<std::string> failure;
  std::optional<std::string> evidence;
};

/// Runs the body, timing it; an Error thrown by the body becomes a failure.
CheckReport timed(const std::string& id, const std::function<Outcome()>& body);

/// First mismatch description, or nullopt when equal.
std::optional<std::string> compare(const UElement& lhs, const UElement& rhs, const std::string& what);
std::optional<std::string> compare(const Tensor& lhs, const Tensor& rhs, const std::string& what);
std::optional<std::string> expect_zero(const UElement& x, const std::string& what);

/// Failure of the commutant criterion (first offending commutator).
std::optional<std::string> criterion_failure(const ShiftMatrix& mu, const UElement& f);

/// mu^2 as row-major entries.
std::vector<Scalar> matrix_square(const ShiftMatrix& mu);

struct CubedCasimirData {
  UElement coefficient;  ///< the stated mu_2-coefficient, in PBW form
  UElement image;        ///< D_mu^2 (tr F^2)^3
  UElement commutator;   ///< [T_1, image]
};
/// The computation behind the cubed Casimir counterexample in split o_N.
CubedCasimirData cubed_casimir_data(int N);

/// c with [G, x] = c [G, y] for all criterion elements G, if one exists.
std::optional<Scalar> congruence_constant(const ShiftMatrix& mu, const UElement& x, const UElement& y);

/// The first max_terms terms of x and a term count.
std::string summarize(const UElement& x, std::size_t max_terms = 12);

/// Several failures are folded into one; the first one wins.
inline void merge(std::optional<std::string>& into, std::optional<std::string> next) {
  if (!into && next) into = std::move(next);
}

}  // namespace qshift::detail
