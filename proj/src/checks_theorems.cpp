#include <cmath>

#include "check_util.hpp"
#include "checks.hpp"
#include "qshift/linear_span.hpp"
#include "qshift/quasi_derivation.hpp"
#include "qshift/selement.hpp"

namespace qshift::detail {

namespace {

using Body = std::function<Outcome()>;

ShiftMatrix generic(Family family, int N) { return ShiftMatrix::generic(LieAlgebra::build(family, N)); }

Outcome criterion_chain(const ShiftMatrix& mu, UElement x, int p_max, bool hat = false) {
  for (int p = 0; p <= p_max; ++p) {
    if (p > 0) x = hat ? d_mu_hat(mu, x) : d_mu(mu, x);
    if (auto fail = criterion_failure(mu, x)) return {"p = " + std::to_string(p) + ": " + *fail, std::nullopt};
  }
  return {};
}

std::string list_coefficients(const std::vector<std::pair<int, Scalar>>& cs) {
  std::string s;
  for (const auto& [m, c] : cs) s += (s.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + ": " + format_scalar(c);
  return s;
}

// D_mu phi^(k)_m expressed through phi^(k+1)_{m'}, m' = k+1..m.
struct Recurrence {
  bool in_span = false;
  std::vector<std::pair<int, Scalar>> coefficients;  // (m', c) for nonzero candidates
  std::string residual;
};

Recurrence solve_recurrence(const ShiftMatrix& mu, int m, int k, bool use_psi) {
  auto member = [&](int mm, int kk) { return use_psi ? psi(mu, mm, kk) : phi(mu, mm, kk); };
  const UElement target = d_mu(mu, member(m, k));
  std::vector<UElement> basis;
  std::vector<int> ms;
  for (int mm = k + 1; mm <= m; ++mm) {
    UElement b = member(mm, k + 1);
    if (b.is_zero()) continue;
    basis.push_back(std::move(b));
    ms.push_back(mm);
  }
  const SpanSolution sol = solve_in_span(target, basis);
  Recurrence r;
  r.in_span = sol.in_span;
  for (std::size_t a = 0; a < ms.size(); ++a) r.coefficients.emplace_back(ms[a], sol.coefficients[a]);
  if (!sol.in_span) r.residual = std::to_string(sol.residual.size()) + " residual coordinates";
  return r;
}

Body recurrence_type_a(Family family, int N, int m, int k, bool use_psi) {
  return [=]() -> Outcome {
    const Recurrence r = solve_recurrence(generic(family, N), m, k, use_psi);
    if (!r.in_span) return {"image not in the span: " + r.residual, std::nullopt};
    for (const auto& [mm, c] : r.coefficients)
      if (is_zero(c)) return {"zero coefficient at m'=" + std::to_string(mm) + " (" + list_coefficients(r.coefficients) + ")", std::nullopt};
    if (static_cast<int>(r.coefficients.size()) != m - k) return {"a candidate vanished identically", std::nullopt};
    return {std::nullopt, list_coefficients(r.coefficients)};
  };
}

Body recurrence_forms(Family family, int N, int m, int k) {
  return [=]() -> Outcome {
    const Recurrence r = solve_recurrence(generic(family, N), m, k, false);
    if (!r.in_span) return {"image not in the span: " + r.residual, std::nullopt};
    const std::string listing = list_coefficients(r.coefficients);
    for (const auto& [mm, c] : r.coefficients) {
      if (mm == m && c != 2 * (m - k)) return {"leading coefficient " + format_scalar(c) + " != 2(m-k) (" + listing + ")", std::nullopt};
      if ((m - mm) % 2 == 1 && !is_zero(c)) return {"even-gap term at m'=" + std::to_string(mm) + " (" + listing + ")", std::nullopt};
    }
    return {std::nullopt, listing};
  };
}

Body symbol_shift(Family family, int N, int max_m) {
  return [=]() -> Outcome {
    const ShiftMatrix mu = generic(family, N);
    const AlgebraPtr& alg = mu.algebra();
    const Scalar scale = alg->form() == Form::none ? 1 : 2;
    for (int m = 1; m <= max_m; ++m) {
      UElement x = phi(mu, m, 0);
      if (x.is_zero()) continue;
      const SElement top = symbol(x);
      for (std::size_t g = 0; g < alg->num_generators(); ++g) {
        const SElement pb = poisson_bracket(SElement::generator(alg, static_cast<GenId>(g)), top);
        if (!pb.is_zero()) return {"symbol of phi^(0)_" + std::to_string(m) + " is not invariant", std::nullopt};
      }
      const auto shifts = argument_shift(top, mu);
      Scalar factor = 1;
      for (int p = 0; p < m; ++p) {
        if (p > 0) {
          x = d_mu(mu, x);
          factor *= scale * p;
        }
        const SElement expected = factor * shifts[static_cast<std::size_t>(p)];
        const SElement got = symbol(x);
        if (!(got == expected) && !(expected.is_zero() && x.is_zero()))
          return {"symbol of D_mu^" + std::to_string(p) + " phi^(0)_" + std::to_string(m) +
                      " differs from the classical shift: " + (got - expected).to_string(),
                  std::nullopt};
      }
    }
    return {};
  };
}

}  // namespace

void add_theorem_checks(std::vector<CheckEntry>& out, const SuiteOptions&) {
  const Suite S = Suite::theorems;
  const Family gl = Family::gl, o = Family::orthogonal_split, sp = Family::symplectic_split,
               oc = Family::orthogonal_canonical;

  // D_mu^p of central elements in gl_N
  for (int N : {2, 3}) {
    const int pmax = N == 3 ? 3 : 2;
    add(out, S, gl, N, "dmu-iterates-trE2", [=] { auto mu = generic(gl, N); return criterion_chain(mu, trace_power(mu.algebra(), 2), pmax); });
    add(out, S, gl, N, "dmu-iterates-trE3", [=] { auto mu = generic(gl, N); return criterion_chain(mu, trace_power(mu.algebra(), 3), pmax); });
    add(out, S, gl, N, "dmu-iterates-phi0", [=] { auto mu = generic(gl, N); return criterion_chain(mu, phi(mu, N, 0), pmax); });
    add(out, S, gl, N, "dmu-iterates-psi0", [=] { auto mu = generic(gl, N); return criterion_chain(mu, psi(mu, 2, 0), pmax); });
  }
  add(out, S, gl, 3, "dmu-hat-iterates-trE3", [=] { auto mu = generic(gl, 3); return criterion_chain(mu, trace_power(mu.algebra(), 3), 2, true); });

  // one step of D_mu on central elements for the forms
  struct Form3 { Family f; int N; };
  for (auto [f, N] : {Form3{o, 3}, Form3{o, 4}, Form3{o, 5}, Form3{sp, 2}, Form3{sp, 4}}) {
    add(out, S, f, N, "bcd-single-step-trF2", [=]() -> Outcome {
      auto mu = generic(f, N);
      return {check_bcd_single_step(mu, trace_power(mu.algebra(), 2)).witness, std::nullopt};
    });
    add(out, S, f, N, "bcd-single-step-phi0_2", [=]() -> Outcome {
      auto mu = generic(f, N);
      return {check_bcd_single_step(mu, phi(mu, 2, 0)).witness, std::nullopt};
    });
  }
  for (auto [f, N] : {Form3{o, 5}, Form3{sp, 4}})
    add(out, S, f, N, "bcd-single-step-trF4", [=]() -> Outcome {
      auto mu = generic(f, N);
      return {check_bcd_single_step(mu, trace_power(mu.algebra(), 4)).witness, std::nullopt};
    });
  add(out, S, o, 4, "bcd-single-step-pfaffian", [=]() -> Outcome {
    auto mu = generic(o, 4);
    return {check_bcd_single_step(mu, pfaffian(mu.algebra())).witness, std::nullopt};
  });

  // recurrences for the phi and psi families
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k < m; ++k) {
      const std::string tag = "_m" + std::to_string(m) + "k" + std::to_string(k);
      add(out, S, gl, 3, "recurrence-phi" + tag, recurrence_type_a(gl, 3, m, k, false));
      add(out, S, gl, 3, "recurrence-psi" + tag, recurrence_type_a(gl, 3, m, k, true));
    }
  for (auto [f, N] : {Form3{o, 4}, Form3{o, 5}, Form3{sp, 4}})
    for (int k = 0; k < 2; ++k)
      add(out, S, f, N, "recurrence-bcd_m2k" + std::to_string(k), recurrence_forms(f, N, 2, k));

  // commutativity of the generated families
  for (auto [f, N] : {Form3{gl, 2}, Form3{gl, 3}, Form3{o, 3}, Form3{o, 4}, Form3{o, 5}, Form3{sp, 2}, Form3{sp, 4}})
    add(out, S, f, N, "family-commuting", [=]() -> Outcome {
      return {pairwise_commuting(amu_generating_family(generic(f, N))).witness, std::nullopt};
    });

  // Pfaffian block
  for (int N : {4, 6}) {
    add(out, S, oc, N, "pfaffian-central", [=]() -> Outcome {
      return {is_central(pfaffian(LieAlgebra::build(oc, N))).witness, std::nullopt};
    });
    add(out, S, o, N, "pfaffian-central", [=]() -> Outcome {
      return {is_central(pfaffian(LieAlgebra::build(o, N))).witness, std::nullopt};
    });
    // Pi = [d_ij Pf F]. In U(o_2n) the ordering corrections give
    // F Pi = Pi F = Pf F . 1 + (n-1) Pi rather than a multiple of the identity.
    add(out, S, oc, N, "pfaffian-matrix", [=]() -> Outcome {
      const AlgebraPtr alg = LieAlgebra::build(oc, N);
      const UMatrix F = UMatrix::generators(alg), Pi = pfaffian_derivative_matrix(alg);
      const UElement pf = pfaffian(alg);
      const UMatrix left = F * Pi, right = Pi * F;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
          UElement expected = Scalar(N / 2 - 1) * Pi(i, j);
          if (i == j) expected += pf;
          if (auto d = compare(left(i, j), expected, "(F Pi)_" + ij)) return {d, std::nullopt};
          if (auto d = compare(right(i, j), expected, "(Pi F)_" + ij)) return {d, std::nullopt};
        }
      return {};
    });
    add(out, S, oc, N, "pfaffian-shift-proportional", [=]() -> Outcome {
      const ShiftMatrix mu = generic(oc, N);
      const auto pis = pf_shift_coeffs(mu);
      UElement x = pfaffian(mu.algebra());
      if (x != pis[0]) return {"pi_(0) differs from Pf F", std::nullopt};
      std::string factors;
      for (int p = 1; p < N / 2; ++p) {
        x = d_mu(mu, x);
        const SpanSolution sol = solve_in_span(x, {pis[static_cast<std::size_t>(p)]});
        if (!sol.in_span || is_zero(sol.coefficients[0]))
          return {"D_mu^" + std::to_string(p) + " Pf F is not a nonzero multiple of pi_(" + std::to_string(p) + ")", std::nullopt};
        factors += (factors.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": " + format_scalar(sol.coefficients[0]);
      }
      return {std::nullopt, factors};
    });
  }

  // Brauer form and anti-symmetrizer form agree for sp_2n, m <= n
  for (int N : {4, 6})
    add(out, S, sp, N, "symplectic-phi-forms-agree", [=]() -> Outcome {
      const ShiftMatrix mu = generic(sp, N);
      for (int m = 1; m <= N / 2; ++m)
        for (int k = 0; k <= m; ++k)
          if (auto d = compare(phi(mu, m, k), phi_brauer(mu, m, k), "phi^(" + std::to_string(k) + ")_" + std::to_string(m)))
            return {d, std::nullopt};
      return {};
    });

  // membership of tr mu F^p
  for (auto [f, N] : {Form3{gl, 3}, Form3{o, 5}, Form3{sp, 4}})
    add(out, S, f, N, "trace-mu-membership", [=]() -> Outcome {
      const ShiftMatrix mu = generic(f, N);
      for (int p = 1; p <= 4; ++p)
        if (auto fail = criterion_failure(mu, trace_matrix_power(mu.algebra(), mu.entries(), p)))
          return {"p = " + std::to_string(p) + ": " + *fail, std::nullopt};
      return {};
    });

  // classical oracle
  add(out, S, gl, 3, "poisson-shift-commuting", [=]() -> Outcome {
    const ShiftMatrix mu = generic(gl, 3);
    const AlgebraPtr& alg = mu.algebra();
    std::vector<SElement> comps;
    for (int p : {2, 3})
      for (const auto& c : argument_shift(symbol(trace_power(alg, p)), mu)) comps.push_back(c);
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = a + 1; b < comps.size(); ++b) {
        const SElement pb = poisson_bracket(comps[a], comps[b]);
        if (!pb.is_zero()) return {"{P_a, P_b} = " + pb.to_string(), std::nullopt};
      }
    return {};
  });
  add(out, S, gl, 3, "symbol-matches-classical-shift", symbol_shift(gl, 3, 3));
  add(out, S, o, 5, "symbol-matches-classical-shift", symbol_shift(o, 5, 4));
  add(out, S, sp, 4, "symbol-matches-classical-shift", symbol_shift(sp, 4, 4));
}

void add_counterexample_checks(std::vector<CheckEntry>& out, const SuiteOptions&) {
  const Suite S = Suite::counterexamples;
  const Family gl = Family::gl, o = Family::orthogonal_split;
  out.push_back({"counterexample-not-preserved:gl_3", S, gl, 3, [] { return counterexample_shift_not_preserved(3); }});
  out.push_back({"counterexample-cubed-casimir:o_5", S, o, 5, [] { return counterexample_cubed_quadratic_casimir(5); }});

  // Analogues at smaller N: outcomes are recorded, not asserted.
  add(out, S, gl, 2, "informational-not-preserved", [] {
    const ShiftMatrix mu = generic(Family::gl, 2);
    const AlgebraPtr& alg = mu.algebra();
    const UElement y = trace_matrix_power(alg, matrix_square(mu), 2);
    const UElement x = d_mu(mu, trace_matrix_power(alg, mu.entries(), 1) * trace_power(alg, 3));
    const auto fail = criterion_failure(mu, y);
    const auto c = congruence_constant(mu, x, y);
    std::string ev = std::string("tr mu^2 E^2 ") + (fail ? "fails the criterion (" + *fail + ")" : "passes the criterion");
    ev += c ? "; congruence constant " + format_scalar(*c) : "; no congruence";
    return Outcome{std::nullopt, ev};
  });
  add(out, S, o, 4, "informational-cubed-casimir", [] {
    const CubedCasimirData d = cubed_casimir_data(4);
    return Outcome{std::nullopt, "mu_2-coefficient = " + (d.coefficient.is_zero() ? std::string("0") : d.coefficient.to_string()) +
                                     "; [T_1, D_mu^2 (tr F^2)^3] = " + (d.commutator.is_zero() ? std::string("0") : summarize(d.commutator))};
  });
  add(out, S, o, 5, "cubed-casimir-reduction", []() -> Outcome {
    const ShiftMatrix mu = generic(Family::orthogonal_split, 5);
    const CubedCasimirData d = cubed_casimir_data(5);
    const UElement y = trace_matrix_power(mu.algebra(), matrix_square(mu), 2);
    const auto c = congruence_constant(mu, d.image, y);
    if (!c) return {"D_mu^2 (tr F^2)^3 is not a multiple of tr mu^2 F^2 modulo the commutant", std::nullopt};
    const std::string ev = "D_mu^2 (tr F^2)^3 = " + format_scalar(*c) + " tr mu^2 F^2 modulo the commutant";
    if (*c != 12 * 32) return {"expected 12 * 32 = 384: " + ev, ev};
    return {std::nullopt, ev};
  });

  // Identities used in the reduction.
  for (int N : {3, 4, 5, 6})
    add(out, S, o, N, "mu-square-trace-relation", [N]() -> Outcome {
      const ShiftMatrix mu = generic(Family::orthogonal_split, N);
      const AlgebraPtr& alg = mu.algebra();
      return {compare(2 * trace_matrix_power(alg, mu.entries(), 2), Scalar(N - 2) * trace_matrix_power(alg, mu.entries(), 1),
                      "2 tr mu F^2 vs (N-2) tr mu F"),
              std::nullopt};
    });
  for (int N : {4, 5})
    add(out, S, o, N, "traced-derivative-of-square", [N]() -> Outcome {
      const AlgebraPtr alg = LieAlgebra::build(Family::orthogonal_split, N);
      const Tensor F1 = Tensor::generator_matrix(alg, 1, 0);
      const Tensor lhs = (F1 * F1).apply_D(0).partial_trace({1});
      const Tensor rhs = Scalar(4) * Tensor::generator_matrix(alg, 1, 0) - Scalar(2 * N - 2) * Tensor::identity(alg, 1);
      return {compare(lhs, rhs, "tr_1 D_0 F_1^2 vs 4 F_0 - (2N-2)"), std::nullopt};
    });
  add(out, S, o, 5, "mu-square-commutator-formula", []() -> Outcome {
    const ShiftMatrix mu = generic(Family::orthogonal_split, 5);
    const AlgebraPtr& alg = mu.algebra();
    const int N = 5;
    const UElement y = trace_matrix_power(alg, matrix_square(mu), 2);
    const UMatrix F = UMatrix::generators(alg), F2 = F * F;
    for (int k = 0; k < N; ++k)
      for (int i = 0; i < N; ++i) {
        const Scalar coeff = mu(i, i) * mu(i, i) - mu(k, k) * mu(k, k);
        const UElement expected = coeff * (2 * F2(k, i) - Scalar(N - 2) * F(k, i));
        if (auto d = compare(commutator(F(k, i), y), expected,
                             "[F_" + std::to_string(k + 1) + std::to_string(i + 1) + ", tr mu^2 F^2]"))
          return {d, std::nullopt};
      }
    return {};
  });
  add(out, S, o, 5, "cubic-shift-images-in-commutant", []() -> Outcome {
    const ShiftMatrix mu = generic(Family::orthogonal_split, 5);
    const AlgebraPtr& alg = mu.algebra();
    const UElement a = d_mu(mu, trace_matrix_power(alg, mu.entries(), 3));
    const UElement b = d_mu(mu, trace_matrix_power(alg, mu.entries(), 1) * trace_power(alg, 2));
    const UElement c = 4 * trace_matrix_power(alg, matrix_square(mu), 2) +
                       2 * (UMatrix::constant(alg, mu.entries()) * UMatrix::generators(alg)).power(2).trace();
    std::optional<std::string> fail;
    if (auto f = criterion_failure(mu, a)) merge(fail, "D_mu tr mu F^3: " + *f);
    if (auto f = criterion_failure(mu, b)) merge(fail, "D_mu tr_12 mu_1 F_1 F_2^2: " + *f);
    if (auto f = criterion_failure(mu, c)) merge(fail, "4 tr mu^2 F^2 + 2 tr (mu F)^2: " + *f);
    return {fail, std::nullopt};
  });
}

}  // namespace qshift::detail
