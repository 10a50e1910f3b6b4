#include "qshift/operators.hpp"

namespace qshift {

namespace {

Tensor young_recursion(const AlgebraPtr& alg, int slots, const std::vector<int>& on, int sign) {
  Tensor acc = Tensor::identity(alg, slots);
  for (std::size_t k = 1; k < on.size(); ++k) {
    Tensor step = Tensor::identity(alg, slots);
    for (std::size_t a = 0; a < k; ++a) {
      Tensor p = Tensor::P(alg, slots, on[a], on[k]);
      if (sign > 0)
        step += p;
      else
        step -= p;
    }
    acc = Scalar(1, static_cast<unsigned long>(k + 1)) * (step * acc);
  }
  return acc;
}

}  // namespace

Tensor antisymmetrizer(const AlgebraPtr& alg, int slots, const std::vector<int>& on) {
  return young_recursion(alg, slots, on, -1);
}

Tensor symmetrizer(const AlgebraPtr& alg, int slots, const std::vector<int>& on) {
  return young_recursion(alg, slots, on, +1);
}

namespace {

std::vector<int> first_slots(int m) {
  std::vector<int> on(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) on[a] = a;
  return on;
}

}  // namespace

Tensor antisymmetrizer(const AlgebraPtr& alg, int m) { return antisymmetrizer(alg, m, first_slots(m)); }
Tensor symmetrizer(const AlgebraPtr& alg, int m) { return symmetrizer(alg, m, first_slots(m)); }

Scalar brauer_omega(const LieAlgebra& alg) {
  switch (alg.form()) {
    case Form::orthogonal: return alg.N();
    case Form::symplectic: return -alg.N();
    case Form::none: break;
  }
  throw Error("the Brauer symmetrizer needs an orthogonal or symplectic algebra");
}

Scalar brauer_gamma(const LieAlgebra& alg, int m) {
  const Scalar w = brauer_omega(alg);
  const Scalar den = w + 2 * m - 2;
  if (is_zero(den))
    throw Error("gamma_" + std::to_string(m) + " has a vanishing denominator for " + alg.name() +
                "; use the anti-symmetrizer form of the symplectic generators");
  return (w + m - 2) / den;
}

Tensor brauer_symmetrizer(const AlgebraPtr& alg, int m, SymplecticQSign sign) {
  if (m < 1) throw Error("Brauer symmetrizer needs m >= 1");
  const Form form = alg->form();
  if (form == Form::none) throw Error("the Brauer symmetrizer needs an orthogonal or symplectic algebra");
  if (form == Form::symplectic && m > alg->n())
    throw Error("the symplectic Brauer product formula is only valid for m <= n = " + std::to_string(alg->n()) +
                "; use the anti-symmetrizer form of the symplectic generators");
  Tensor acc = Tensor::identity(alg, m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const int gap = b - a;
      Tensor factor = Tensor::identity(alg, m);
      if (form == Form::orthogonal) {
        factor += Scalar(1, static_cast<unsigned long>(gap)) * Tensor::P(alg, m, a, b);
        const Scalar den = Scalar(alg->N()) / 2 + gap - 1;
        factor -= (1 / den) * Tensor::Q(alg, m, a, b);
      } else {
        factor -= Scalar(1, static_cast<unsigned long>(gap)) * Tensor::P(alg, m, a, b);
        const Scalar q = Scalar(1, static_cast<unsigned long>(alg->n() - gap + 1));
        if (sign == SymplecticQSign::idempotent)
          factor -= q * Tensor::Q(alg, m, a, b);
        else
          factor += q * Tensor::Q(alg, m, a, b);
      }
      acc = acc * factor;
    }
  acc *= 1 / Scalar(factorial(m));
  return acc;
}

}  // namespace qshift
