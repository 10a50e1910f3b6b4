#pragma once

#include "qshift/lie_algebra.hpp"

namespace qshift::detail {

inline void add_term(Terms& into, const Monomial& m, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (is_zero(it->second)) into.erase(it);
}

inline void accumulate(Terms& into, const Terms& from, const Scalar& k) {
  if (is_zero(k)) return;
  const bool unit = k == 1;
  for (const auto& [m, c] : from) {
    auto [it, inserted] = into.try_emplace(m, c);
    if (inserted) {
      if (!unit) it->second *= k;
      continue;
    }
    if (unit)
      it->second += c;
    else
      it->second += k * c;
    if (is_zero(it->second)) into.erase(it);
  }
}

Terms monomial_product(const LieAlgebra& alg, const Monomial& a, const Monomial& b);

}  // namespace qshift::detail
