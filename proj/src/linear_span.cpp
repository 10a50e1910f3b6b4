#include "qshift/linear_span.hpp"

#include <functional>

#include "qshift/generators.hpp"

namespace qshift {

SparseVector flatten(const UElement& f) {
  SparseVector v;
  for (const auto& [m, c] : f.terms()) v.emplace(m.word(), c);
  return v;
}

SparseVector flatten(const Tensor& t) {
  SparseVector v;
  for (const auto& [k, u] : t.entries()) {
    std::string prefix(16, '\0');
    for (int b = 0; b < 8; ++b) {
      prefix[b] = static_cast<char>((k.first >> (8 * b)) & 0xff);
      prefix[8 + b] = static_cast<char>((k.second >> (8 * b)) & 0xff);
    }
    for (const auto& [m, c] : u.terms()) v.emplace(prefix + m.word(), c);
  }
  return v;
}

namespace {

void axpy(SparseVector& into, const SparseVector& from, const Scalar& k) {
  for (const auto& [key, c] : from) {
    auto [it, inserted] = into.try_emplace(key, k * c);
    if (inserted) continue;
    it->second += k * c;
    if (is_zero(it->second)) into.erase(it);
  }
}

}  // namespace

SpanSolution solve_in_span(const SparseVector& target, const std::vector<SparseVector>& basis) {
  const std::size_t K = basis.size();
  struct Row {
    SparseVector vec;
    std::string pivot;
    std::vector<Scalar> combo;  // vec = sum combo[k] basis[k]
  };
  std::vector<Row> rows;
  SpanSolution out;
  for (std::size_t k = 0; k < K; ++k) {
    Row r{basis[k], {}, std::vector<Scalar>(K)};
    r.combo[k] = 1;
    for (const Row& e : rows) {
      auto it = r.vec.find(e.pivot);
      if (it == r.vec.end()) continue;
      const Scalar f = it->second / e.vec.at(e.pivot);
      axpy(r.vec, e.vec, -f);
      for (std::size_t j = 0; j < K; ++j)
        if (!is_zero(e.combo[j])) r.combo[j] -= f * e.combo[j];
    }
    if (r.vec.empty()) continue;
    // smallest key as pivot keeps runs deterministic
    std::string pivot = r.vec.begin()->first;
    for (const auto& [key, c] : r.vec)
      if (key < pivot) pivot = key;
    r.pivot = pivot;
    rows.push_back(std::move(r));
  }
  out.rank = static_cast<int>(rows.size());

  SparseVector res = target;
  std::vector<Scalar> x(K);
  for (const Row& e : rows) {
    auto it = res.find(e.pivot);
    if (it == res.end()) continue;
    const Scalar f = it->second / e.vec.at(e.pivot);
    axpy(res, e.vec, -f);
    for (std::size_t j = 0; j < K; ++j)
      if (!is_zero(e.combo[j])) x[j] += f * e.combo[j];
  }
  // independent re-check of the combination
  SparseVector check = target;
  for (std::size_t k = 0; k < K; ++k)
    if (!is_zero(x[k])) axpy(check, basis[k], -x[k]);
  out.in_span = res.empty() && check.empty();
  out.coefficients = std::move(x);
  out.residual = res.empty() ? std::move(check) : std::move(res);
  return out;
}

SpanSolution solve_in_span(const UElement& target, const std::vector<UElement>& basis) {
  std::vector<SparseVector> b;
  b.reserve(basis.size());
  for (const auto& e : basis) b.push_back(flatten(e));
  return solve_in_span(flatten(target), b);
}

SpanSolution solve_in_span(const Tensor& target, const std::vector<Tensor>& basis) {
  std::vector<SparseVector> b;
  b.reserve(basis.size());
  for (const auto& e : basis) b.push_back(flatten(e));
  return solve_in_span(flatten(target), b);
}

std::vector<UElement> central_monomials(const AlgebraPtr& alg, int max_degree) {
  std::vector<UElement> traces;
  for (int j = 1; j <= max_degree; ++j) traces.push_back(trace_power(alg, j));
  std::vector<UElement> out;
  std::function<void(int, int, const UElement&)> rec = [&](int min_j, int budget, const UElement& acc) {
    out.push_back(acc);
    for (int j = min_j; j <= budget; ++j) {
      if (traces[j - 1].is_zero()) continue;
      rec(j, budget - j, acc * traces[j - 1]);
    }
  };
  rec(1, max_degree, UElement::one(alg));
  return out;
}

}  // namespace qshift
