#include "qshift/quasi_derivation.hpp"

#include "memo.hpp"
#include "qshift/random.hpp"
#include "terms_util.hpp"

namespace qshift {

namespace {

Scalar generator_derivative(const LieAlgebra& alg, GenId g, int i, int j) {
  for (const auto& e : alg.derivative(g))
    if (e.row == i && e.col == j) return e.coeff;
  return 0;
}

void check_indices(const LieAlgebra& alg, int i, int j) {
  if (i < 0 || j < 0 || i >= alg.N() || j >= alg.N())
    throw Error("quasi-derivation index (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") out of range for " + alg.name());
}

}  // namespace

const Terms& LieAlgebra::quasi_derivative(const Monomial& m, int i, int j, DerivationKind kind) const {
  std::string key = m.word();
  key.push_back(static_cast<char>(i));
  key.push_back(static_cast<char>(j));
  key.push_back(kind == DerivationKind::hat ? 'h' : 's');
  if (const Terms* hit = memo_->find(memo_->derivatives, key)) return *hit;

  Terms result;
  if (!m.empty()) {
    // m = g t:  d(g t) = d(g) t + g d(t) -/+ correction
    const GenId g = m.front();
    const Monomial t = m.tail(1);
    const Monomial lead = Monomial::single(g);
    detail::add_term(result, t, generator_derivative(*this, g, i, j));
    for (const auto& [u, c] : quasi_derivative(t, i, j, kind))
      detail::accumulate(result, detail::monomial_product(*this, lead, u), c);
    for (int k = 0; k < N_; ++k) {
      if (kind == DerivationKind::standard) {
        const Scalar a = generator_derivative(*this, g, i, k);
        if (!is_zero(a)) detail::accumulate(result, quasi_derivative(t, k, j, kind), -a);
      } else {
        const Scalar a = generator_derivative(*this, g, k, j);
        if (!is_zero(a)) detail::accumulate(result, quasi_derivative(t, i, k, kind), a);
      }
    }
  }
  return memo_->insert(memo_->derivatives, std::move(key), std::move(result));
}

UElement quasi_derive(const UElement& f, int i, int j, DerivationKind kind) {
  const AlgebraPtr& alg = f.algebra();
  if (!alg) return f;
  check_indices(*alg, i, j);
  if (kind == DerivationKind::hat && alg->family() != Family::gl)
    throw Error("the hat quasi-derivations are defined for gl_N only");
  Terms out;
  for (const auto& [m, c] : f.terms()) detail::accumulate(out, alg->quasi_derivative(m, i, j, kind), c);
  return UElement(alg, std::move(out));
}

namespace {

UElement d_mu_kind(const ShiftMatrix& mu, const UElement& f, DerivationKind kind) {
  const AlgebraPtr alg = common_algebra(mu.algebra(), f.algebra());
  Terms out;
  const int N = alg->N();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Scalar& w = mu(i, j);
      if (is_zero(w)) continue;
      for (const auto& [m, c] : f.terms()) detail::accumulate(out, alg->quasi_derivative(m, j, i, kind), w * c);
    }
  return UElement(alg, std::move(out));
}

}  // namespace

UElement d_mu(const ShiftMatrix& mu, const UElement& f) { return d_mu_kind(mu, f, DerivationKind::standard); }

UElement d_mu_hat(const ShiftMatrix& mu, const UElement& f) {
  if (mu.algebra()->family() != Family::gl) throw Error("the hat quasi-derivations are defined for gl_N only");
  return d_mu_kind(mu, f, DerivationKind::hat);
}

UElement d_mu_iterate(const ShiftMatrix& mu, const UElement& f, int p) {
  if (p < 0) throw Error("negative power of D_mu");
  UElement out = f;
  for (int k = 0; k < p && !out.is_zero(); ++k) out = d_mu(mu, out);
  return out;
}

UElement transpose_automorphism(const UElement& f) {
  const AlgebraPtr& alg = f.algebra();
  if (!alg) return f;
  if (alg->family() != Family::gl) throw Error("the transpose automorphism is implemented for gl_N only");
  UElement out(alg);
  for (const auto& [m, c] : f.terms()) {
    UElement term = UElement::scalar(alg, c);
    for (std::size_t k = 0; k < m.degree(); ++k) {
      auto [i, j] = alg->generator_index(m[k]);
      term = term * UElement::matrix_entry(alg, j, i);
      term *= Scalar(-1);
    }
    out += term;
  }
  return out;
}

ConsistencyReport leibniz_consistency_check(const UElement& f, const UElement& g, DerivationKind kind) {
  ConsistencyReport report;
  report.trials = 1;
  const AlgebraPtr alg = common_algebra(f.algebra(), g.algebra());
  if (!alg) return report;
  const int N = alg->N();
  const UElement fg = f * g;
  // cache d_ab f and d_ab g
  std::vector<UElement> df, dg;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      df.push_back(quasi_derive(f, a, b, kind));
      dg.push_back(quasi_derive(g, a, b, kind));
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      UElement rhs = df[i * N + j] * g + f * dg[i * N + j];
      for (int k = 0; k < N; ++k) {
        if (kind == DerivationKind::standard)
          rhs -= df[i * N + k] * dg[k * N + j];
        else
          rhs += df[k * N + j] * dg[i * N + k];
      }
      const UElement residual = quasi_derive(fg, i, j, kind) - rhs;
      if (!residual.is_zero()) {
        ++report.violations;
        if (report.witness.empty())
          report.witness = "d_" + std::to_string(i + 1) + std::to_string(j + 1) + " of (" + f.to_string() +
                           ")(" + g.to_string() + "): residual " + residual.to_string();
      }
    }
  return report;
}

ConsistencyReport leibniz_consistency_check(const AlgebraPtr& alg, int trials, std::uint64_t seed,
                                            DerivationKind kind) {
  ConsistencyReport total;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const UElement f = random_element(alg, rng, 3, 3);
    const UElement g = random_element(alg, rng, 3, 3);
    const ConsistencyReport one = leibniz_consistency_check(f, g, kind);
    ++total.trials;
    total.violations += one.violations;
    if (total.witness.empty()) total.witness = one.witness;
  }
  return total;
}

}  // namespace qshift
