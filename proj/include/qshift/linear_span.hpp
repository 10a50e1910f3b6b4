#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "qshift/tensor.hpp"

namespace qshift {

/// Coordinates of an element in some fixed basis (PBW monomials, or tensor
/// entry plus monomial), keyed by an opaque string.
using SparseVector = std::unordered_map<std::string, Scalar>;

SparseVector flatten(const UElement& f);
SparseVector flatten(const Tensor& t);

struct SpanSolution {
  bool in_span = false;
  /// One coefficient per candidate; dependent candidates get 0.
  std::vector<Scalar> coefficients;
  int rank = 0;
  /// target - sum c_k b_k after elimination; empty iff in_span.
  SparseVector residual;
};

/// Exact solve of target = sum_k c_k basis[k]. The returned combination is
/// re-checked against the target, so in_span is never a false positive.
SpanSolution solve_in_span(const SparseVector& target, const std::vector<SparseVector>& basis);
SpanSolution solve_in_span(const UElement& target, const std::vector<UElement>& basis);
SpanSolution solve_in_span(const Tensor& target, const std::vector<Tensor>& basis);

/// Products tr F^{j_1} ... tr F^{j_r} (j_i >= 1, nondecreasing) of total
/// degree <= max_degree, including the empty product 1. They span the
/// candidate central coefficients of the decomposition checks.
std::vector<UElement> central_monomials(const AlgebraPtr& alg, int max_degree);

}  // namespace qshift
