#include <algorithm>
#include <numeric>

#include "checks.hpp"
#include "qshift/generators.hpp"
#include "qshift/linear_span.hpp"
#include "qshift/operators.hpp"

namespace qshift::detail {

namespace {

struct Alg {
  Family family;
  int N;
};

constexpr Family gl = Family::gl, o = Family::orthogonal_split, sp = Family::symplectic_split,
                 oc = Family::orthogonal_canonical;

AlgebraPtr build(Alg a) { return LieAlgebra::build(a.family, a.N); }

const std::vector<Alg> kForms = {{o, 3}, {o, 4}, {o, 5}, {sp, 2}, {sp, 4}, {oc, 4}};

std::string num(int k) { return std::to_string(k); }

Tensor power(const Tensor& x, int p) {
  Tensor out = Tensor::identity(x.algebra(), x.slots());
  for (int k = 0; k < p; ++k) out = out * x;
  return out;
}

// P_ab or Phi_ab depending on the type: the image of D_a F_b.
Tensor phi_or_p(const AlgebraPtr& alg, int slots, int a, int b) {
  return alg->form() == Form::none ? Tensor::P(alg, slots, a, b) : Tensor::Phi(alg, slots, a, b);
}

Tensor F(const AlgebraPtr& alg, int slots, int a) { return Tensor::generator_matrix(alg, slots, a); }

// [E_1^r, E_0^s] = sum_a (E_0^{a-1} E_1^{r+s-a} - E_0^{r+s-a} E_1^{a-1}) P_01
Outcome yang(Alg a, int max_total) {
  const AlgebraPtr alg = build(a);
  const Tensor E0 = F(alg, 2, 0), E1 = F(alg, 2, 1), P = Tensor::P(alg, 2, 0, 1);
  std::vector<Tensor> p0{Tensor::identity(alg, 2)}, p1{Tensor::identity(alg, 2)};
  for (int k = 1; k < max_total; ++k) {
    p0.push_back(p0.back() * E0);
    p1.push_back(p1.back() * E1);
  }
  for (int r = 1; r < max_total; ++r)
    for (int s = 1; r + s <= max_total; ++s) {
      const Tensor lhs = p1[r] * p0[s] - p0[s] * p1[r];
      Tensor rhs(alg, 2);
      for (int k = 1; k <= std::min(r, s); ++k) rhs += (p0[k - 1] * p1[r + s - k] - p0[r + s - k] * p1[k - 1]) * P;
      if (auto d = compare(lhs, rhs, "r = " + num(r) + ", s = " + num(s))) return {d, std::nullopt};
    }
  return {};
}

// F_0 F_1 - F_1 F_0 = Phi_01 F_1 - F_1 Phi_01, and D_0 F_1 = Phi_01.
Outcome defining_relations(Alg a) {
  const AlgebraPtr alg = build(a);
  const Tensor F0 = F(alg, 2, 0), F1 = F(alg, 2, 1), X = phi_or_p(alg, 2, 0, 1);
  if (auto d = compare(F0 * F1 - F1 * F0, X * F1 - F1 * X, "defining relations")) return {d, std::nullopt};
  if (auto d = compare(F(alg, 1, 0).apply_D(0), X, "D_0 F_1")) return {d, std::nullopt};
  return {};
}

// tr_1 X_1 P_01 = tr_1 P_01 X_0 = X_0 for X in {F, F^2, mu}.
Outcome trace_with_permutation(Alg a) {
  const AlgebraPtr alg = build(a);
  const ShiftMatrix mu = ShiftMatrix::generic(alg);
  const Tensor P = Tensor::P(alg, 2, 0, 1);
  const std::vector<std::pair<std::string, UMatrix>> xs = {
      {"F", UMatrix::generators(alg)},
      {"F^2", UMatrix::generators(alg).power(2)},
      {"mu", UMatrix::constant(alg, mu.entries())},
  };
  for (const auto& [name, x] : xs) {
    const Tensor x0 = Tensor::embed(x, 1, 0);
    if (auto d = compare((Tensor::embed(x, 2, 1) * P).partial_trace({1}), x0, "tr_1 " + name + "_1 P_01"))
      return {d, std::nullopt};
    if (auto d = compare((P * Tensor::embed(x, 2, 0)).partial_trace({1}), x0, "tr_1 P_01 " + name + "_0"))
      return {d, std::nullopt};
  }
  return {};
}

// P^2 = 1, PQ = QP = +-Q, Q^2 = N Q.
Outcome pq_relations(Alg a) {
  const AlgebraPtr alg = build(a);
  const Tensor P = Tensor::P(alg, 2, 0, 1), Q = Tensor::Q(alg, 2, 0, 1);
  const Scalar sign = alg->form() == Form::orthogonal ? 1 : -1;
  if (auto d = compare(P * P, Tensor::identity(alg, 2), "P^2")) return {d, std::nullopt};
  if (auto d = compare(P * Q, sign * Q, "PQ")) return {d, std::nullopt};
  if (auto d = compare(Q * P, sign * Q, "QP")) return {d, std::nullopt};
  if (auto d = compare(Q * Q, Scalar(alg->N()) * Q, "Q^2")) return {d, std::nullopt};
  return {};
}

// A^(m) P_{0 i1} ... P_{0 is} = A^(m) P_{i1 i2} ... P_{i1 is} P_{0 i1} = (-1)^{s-1} A^(m) P_{0 i1}
Outcome antisymmetrizer_absorbs(Alg a, int m) {
  const AlgebraPtr alg = build(a);
  const int slots = m + 1;
  std::vector<int> on(static_cast<std::size_t>(m));
  std::iota(on.begin(), on.end(), 1);
  const Tensor A = antisymmetrizer(alg, slots, on);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> is;
    for (int k = 0; k < m; ++k)
      if (mask & (1u << k)) is.push_back(k + 1);
    const int s = static_cast<int>(is.size());
    Tensor lhs = A, mid = A;
    for (int i : is) lhs = lhs * Tensor::P(alg, slots, 0, i);
    for (int k = 1; k < s; ++k) mid = mid * Tensor::P(alg, slots, is[0], is[k]);
    mid = mid * Tensor::P(alg, slots, 0, is[0]);
    const Tensor rhs = Scalar(s % 2 ? 1 : -1) * (A * Tensor::P(alg, slots, 0, is[0]));
    const std::string what = "m = " + num(m) + ", s = " + num(s);
    if (auto d = compare(lhs, mid, what + " (middle)")) return {d, std::nullopt};
    if (auto d = compare(lhs, rhs, what)) return {d, std::nullopt};
  }
  return {};
}

// tr A^(m) X = tr A^(m) p(X), with p(X) the conjugate of X by a slot permutation.
Outcome trace_conjugation(Alg a, int m, int trials, Rng rng) {
  const AlgebraPtr alg = build(a);
  const ShiftMatrix mu = ShiftMatrix::generic(alg);
  const Tensor A = antisymmetrizer(alg, m);
  std::uniform_int_distribution<int> kind(0, 2), slot(0, m - 1), length(1, 4);
  for (int t = 0; t < trials; ++t) {
    Tensor X = Tensor::identity(alg, m);
    const int len = length(rng);
    for (int k = 0; k < len; ++k) {
      const int x = slot(rng), y = slot(rng);
      switch (kind(rng)) {
        case 0: X = X * F(alg, m, x); break;
        case 1: X = X * Tensor::constant_matrix(alg, m, x, mu.entries()); break;
        default:
          if (x != y) X = X * Tensor::P(alg, m, x, y);
      }
    }
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    if (auto d = compare((A * X).full_trace(), (A * X.permuted(order)).full_trace(), "trial " + num(t)))
      return {d, std::nullopt};
  }
  return {std::nullopt, std::to_string(trials) + " random products"};
}

// tr_{m-s+2..m} A^(m) = C(N-m+s-1, s-1) / C(m, s-1) A^(m-s+1)
Outcome antisymmetrizer_partial_traces(Alg a) {
  const AlgebraPtr alg = build(a);
  const int N = alg->N();
  std::vector<Tensor> A{Tensor()};
  for (int m = 1; m <= N; ++m) A.push_back(antisymmetrizer(alg, m));
  for (int m = 1; m <= N; ++m)
    for (int s = 1; s <= m; ++s) {
      std::vector<int> traced;
      for (int k = m - s + 1; k < m; ++k) traced.push_back(k);
      const Scalar c = Scalar(binomial(N - m + s - 1, s - 1)) / Scalar(binomial(m, s - 1));
      if (auto d = compare(A[m].partial_trace(traced), c * A[m - s + 1], "m = " + num(m) + ", s = " + num(s)))
        return {d, std::nullopt};
    }
  return {};
}

// Q_01 F_0^q Q_01 = Q_01 F_1^q Q_01 = Q_01 tr F^q, Q_01 F_1^q = Q_01 (F_0^q)', F_1^q Q_01 = (F_0^q)' Q_01
Outcome q_relations(Alg a, int q_max) {
  const AlgebraPtr alg = build(a);
  const Tensor Q = Tensor::Q(alg, 2, 0, 1), F0 = F(alg, 2, 0), F1 = F(alg, 2, 1);
  for (int q = 0; q <= q_max; ++q) {
    const Tensor f0 = power(F0, q), f1 = power(F1, q), f0p = f0.transpose_prime(0);
    const Tensor rhs = Q * trace_power(alg, q);
    const std::string qs = "q = " + num(q) + ": ";
    if (auto d = compare(Q * f0 * Q, rhs, qs + "Q F_0^q Q")) return {d, std::nullopt};
    if (auto d = compare(Q * f1 * Q, rhs, qs + "Q F_1^q Q")) return {d, std::nullopt};
    if (auto d = compare(Q * f1, Q * f0p, qs + "Q F_1^q")) return {d, std::nullopt};
    if (auto d = compare(f1 * Q, f0p * Q, qs + "F_1^q Q")) return {d, std::nullopt};
  }
  return {};
}

// P_{01} Phi_{02}..Phi_{0s} = Phi_{12}..Phi_{1s} P_{01},
// Q_{01} Phi_{02}..Phi_{0s} = (-1)^{s-1} Q_{01} Phi_{1s}..Phi_{12},
// with Q_{0i} P_{0j} = Q_{0i} Q_{ij} and Q_{0i} Q_{0j} = Q_{0i} P_{ij}.
Outcome phi_chain_relations(Alg a, int s_max) {
  const AlgebraPtr alg = build(a);
  {
    const Tensor Q01 = Tensor::Q(alg, 3, 0, 1);
    if (auto d = compare(Q01 * Tensor::P(alg, 3, 0, 2), Q01 * Tensor::Q(alg, 3, 1, 2), "Q_01 P_02"))
      return {d, std::nullopt};
    if (auto d = compare(Q01 * Tensor::Q(alg, 3, 0, 2), Q01 * Tensor::P(alg, 3, 1, 2), "Q_01 Q_02"))
      return {d, std::nullopt};
  }
  for (int s = 1; s <= s_max; ++s) {
    const int slots = s + 1;
    Tensor chain = Tensor::identity(alg, slots), fwd = Tensor::identity(alg, slots), bwd = Tensor::identity(alg, slots);
    for (int k = 2; k <= s; ++k) {
      chain = chain * Tensor::Phi(alg, slots, 0, k);
      fwd = fwd * Tensor::Phi(alg, slots, 1, k);
    }
    for (int k = s; k >= 2; --k) bwd = bwd * Tensor::Phi(alg, slots, 1, k);
    const Tensor P01 = Tensor::P(alg, slots, 0, 1), Q01 = Tensor::Q(alg, slots, 0, 1);
    if (auto d = compare(P01 * chain, fwd * P01, "s = " + num(s) + ", P line")) return {d, std::nullopt};
    if (auto d = compare(Q01 * chain, Scalar(s % 2 ? 1 : -1) * (Q01 * bwd), "s = " + num(s) + ", Q line"))
      return {d, std::nullopt};
  }
  return {};
}

// tr_0 mu_0 Q_01 = -tr_0 mu_1 Q_01 = -mu_1 for mu in the dual of the algebra.
Outcome trace_mu_q(Alg a, int trials, Rng rng) {
  const AlgebraPtr alg = build(a);
  const Tensor Q = Tensor::Q(alg, 2, 0, 1);
  for (int t = 0; t <= trials; ++t) {
    const ShiftMatrix mu = t == 0 ? ShiftMatrix::generic(alg) : random_shift_matrix(alg, rng);
    const Tensor lhs = (Tensor::constant_matrix(alg, 2, 0, mu.entries()) * Q).partial_trace({0});
    const Tensor mid = (Tensor::constant_matrix(alg, 2, 1, mu.entries()) * Q).partial_trace({0});
    const Tensor rhs = Scalar(-1) * Tensor::constant_matrix(alg, 1, 0, mu.entries());
    if (auto d = compare(lhs, rhs, "tr_0 mu_0 Q_01, trial " + num(t))) return {d, std::nullopt};
    if (auto d = compare(mid, Scalar(-1) * rhs, "tr_0 mu_1 Q_01, trial " + num(t))) return {d, std::nullopt};
  }
  return {std::nullopt, std::to_string(trials) + " random mu plus the generic one"};
}

// A^(m) Phi_12 ... Phi_1r = A^(m) (1+Q_23)(1+Q_45)...(1+Q_{r-1,r})               r odd
//                         = -A^(m) (1+Q_23)...(1+Q_{r-2,r-1})(1+Q_{1r})          r even
Outcome antisymmetrizer_phi_chain(Alg a, int m_max) {
  const AlgebraPtr alg = build(a);
  for (int m = 2; m <= m_max; ++m) {
    const Tensor A = antisymmetrizer(alg, m);
    const Tensor one = Tensor::identity(alg, m);
    for (int r = 2; r <= m; ++r) {
      Tensor lhs = A;
      for (int k = 1; k < r; ++k) lhs = lhs * Tensor::Phi(alg, m, 0, k);
      Tensor rhs = A;
      const int pairs_end = r % 2 ? r : r - 1;  // 1-based pairs (2,3), (4,5), ... below pairs_end
      for (int b = 2; b + 1 <= pairs_end; b += 2) rhs = rhs * (one + Tensor::Q(alg, m, b - 1, b));
      if (r % 2 == 0) rhs = Scalar(-1) * (rhs * (one + Tensor::Q(alg, m, 0, r - 1)));
      if (auto d = compare(lhs, rhs, "m = " + num(m) + ", r = " + num(r))) return {d, std::nullopt};
    }
  }
  return {};
}

// tr_m gamma_m S^(m) = +-(omega + m - 2)/m gamma_{m-1} S^(m-1), and S^(m) is idempotent.
Outcome brauer_properties(Alg a, int m_max) {
  const AlgebraPtr alg = build(a);
  const Scalar omega = brauer_omega(*alg);
  const Scalar sign = alg->form() == Form::orthogonal ? 1 : -1;
  std::vector<Tensor> S{Tensor()};
  for (int m = 1; m <= m_max; ++m) S.push_back(brauer_symmetrizer(alg, m));
  for (int m = 1; m <= m_max; ++m)
    if (auto d = compare(S[m] * S[m], S[m], "S^(" + num(m) + ") idempotent")) return {d, std::nullopt};
  for (int m = 2; m <= m_max; ++m) {
    const Tensor lhs = brauer_gamma(*alg, m) * S[m].partial_trace({m - 1});
    const Tensor rhs = (sign * (omega + m - 2) / m * brauer_gamma(*alg, m - 1)) * S[m - 1];
    if (auto d = compare(lhs, rhs, "tr_" + num(m) + " gamma_m S^(" + num(m) + ")")) return {d, std::nullopt};
  }
  return {};
}

// c * X for every central monomial c with deg c + base_degree <= max_degree.
void add_with_central(std::vector<Tensor>& out, const std::vector<UElement>& central, const Tensor& x, int base_degree,
                      int max_degree) {
  for (const UElement& c : central)
    if (std::max(c.degree(), 0) + base_degree <= max_degree) out.push_back(c * x);
}

std::string coefficient_count(const SpanSolution& s) {
  int nz = 0;
  for (const Scalar& c : s.coefficients) nz += !is_zero(c);
  return std::to_string(nz) + " of " + std::to_string(s.coefficients.size()) + " candidates used";
}

// (F^r)' - (-1)^r F^r in the Z-span of F^q, q < r.
Outcome transpose_of_powers(Alg a, int r_max) {
  const AlgebraPtr alg = build(a);
  const std::vector<UElement> central = central_monomials(alg, r_max);
  const Tensor F0 = F(alg, 1, 0);
  std::string ev;
  for (int r = 1; r <= r_max; ++r) {
    const Tensor fr = power(F0, r);
    const Tensor target = fr.transpose_prime(0) - Scalar(r % 2 ? -1 : 1) * fr;
    std::vector<Tensor> basis;
    for (int q = 0; q < r; ++q) add_with_central(basis, central, power(F0, q), q, r);
    const SpanSolution sol = solve_in_span(target, basis);
    if (!sol.in_span) return {"r = " + num(r) + ": residual with " + num(static_cast<int>(sol.residual.size())) + " coordinates", std::nullopt};
    ev += (ev.empty() ? "" : "; ") + std::string("r=") + num(r) + ": " + coefficient_count(sol);
  }
  return {std::nullopt, ev};
}

// Candidates F_0^k F_1^l, F_0^k F_1^l P_01 and (forms) F_0^k Q_01 F_0^l with k + l <= max_kl,
// each times central monomials keeping the total degree <= max_degree.
std::vector<Tensor> two_slot_candidates(const AlgebraPtr& alg, int max_kl, int max_degree, bool central_coefficients) {
  const Tensor F0 = F(alg, 2, 0), F1 = F(alg, 2, 1), P = Tensor::P(alg, 2, 0, 1);
  const std::vector<UElement> central =
      central_coefficients ? central_monomials(alg, max_degree) : std::vector<UElement>{UElement::one(alg)};
  std::vector<Tensor> f0{Tensor::identity(alg, 2)}, f1{Tensor::identity(alg, 2)};
  for (int k = 1; k <= max_kl; ++k) {
    f0.push_back(f0.back() * F0);
    f1.push_back(f1.back() * F1);
  }
  std::vector<Tensor> out;
  for (int k = 0; k <= max_kl; ++k)
    for (int l = 0; k + l <= max_kl; ++l) {
      add_with_central(out, central, f0[k] * f1[l], k + l, max_degree);
      add_with_central(out, central, f0[k] * f1[l] * P, k + l, max_degree);
      if (alg->form() != Form::none) add_with_central(out, central, f0[k] * Tensor::Q(alg, 2, 0, 1) * f0[l], k + l, max_degree);
    }
  return out;
}

// D_0 F_1^p in the span of the two-slot candidates with k + l <= p - 1.
Outcome derivative_of_powers(Alg a, int p_max) {
  const AlgebraPtr alg = build(a);
  const bool central = alg->form() != Form::none;
  std::string ev;
  for (int p = 1; p <= p_max; ++p) {
    const Tensor target = power(F(alg, 1, 0), p).apply_D(0);
    const SpanSolution sol = solve_in_span(target, two_slot_candidates(alg, p - 1, p - 1, central));
    if (!sol.in_span) return {"p = " + num(p) + ": D_0 F_1^p is outside the span", std::nullopt};
    ev += (ev.empty() ? "" : "; ") + std::string("p=") + num(p) + ": " + coefficient_count(sol);
  }
  return {std::nullopt, ev};
}

// F_1^r F_0^s in the Z-span of the two-slot candidates.
Outcome reordering(Alg a, int total) {
  const AlgebraPtr alg = build(a);
  const Tensor F0 = F(alg, 2, 0), F1 = F(alg, 2, 1);
  const std::vector<Tensor> basis = two_slot_candidates(alg, total, total, true);
  for (int r = 1; r < total; ++r)
    for (int s = 1; r + s <= total; ++s) {
      const SpanSolution sol = solve_in_span(power(F1, r) * power(F0, s), basis);
      if (!sol.in_span) return {"r = " + num(r) + ", s = " + num(s) + ": outside the span", std::nullopt};
    }
  return {};
}

// tr E^r mu E^s - tr mu E^{r+s} in the Z-span of tr mu E^q, q < r + s.
Outcome reduced_traces(Alg a, int max_total) {
  const AlgebraPtr alg = build(a);
  const ShiftMatrix mu = ShiftMatrix::generic(alg);
  const UMatrix E = UMatrix::generators(alg), M = UMatrix::constant(alg, mu.entries());
  const std::vector<UElement> central = central_monomials(alg, max_total);
  for (int total = 1; total <= max_total; ++total) {
    std::vector<UElement> basis;
    for (int q = 0; q < total; ++q) {
      const UElement tq = (M * E.power(q)).trace();
      for (const UElement& c : central)
        if (std::max(c.degree(), 0) + q <= total) basis.push_back(c * tq);
    }
    const UElement top = (M * E.power(total)).trace();
    for (int r = 0; r <= total; ++r) {
      const UElement target = (E.power(r) * M * E.power(total - r)).trace() - top;
      const SpanSolution sol = solve_in_span(target, basis);
      if (!sol.in_span) return {"r = " + num(r) + ", s = " + num(total - r) + ": outside the span", std::nullopt};
    }
  }
  return {};
}

}  // namespace

void add_tensor_identity_checks(std::vector<CheckEntry>& out, const SuiteOptions& options) {
  const Suite S = Suite::identities;
  const int few = std::max(1, options.trials / 100);
  const std::uint64_t seed = options.seed;
  auto rng_for = [seed](const std::string& name, Alg a) { return check_rng(seed, name + ":" + build(a)->name()); };

  for (int N : {2, 3}) add(out, S, gl, N, "yang", [=] { return yang({gl, N}, 6); });
  for (Alg a : {Alg{gl, 2}, Alg{gl, 3}, Alg{o, 3}, Alg{o, 4}, Alg{o, 5}, Alg{sp, 2}, Alg{sp, 4}, Alg{oc, 4}}) {
    add(out, S, a.family, a.N, "defining-relations", [=] { return defining_relations(a); });
    add(out, S, a.family, a.N, "trace-with-permutation", [=] { return trace_with_permutation(a); });
  }
  for (Alg a : kForms) {
    add(out, S, a.family, a.N, "pq-relations", [=] { return pq_relations(a); });
    add(out, S, a.family, a.N, "q-relations", [=] { return q_relations(a, 4); });
    add(out, S, a.family, a.N, "phi-chain-relations", [=] { return phi_chain_relations(a, 4); });
    add(out, S, a.family, a.N, "trace-mu-q", [=] { return trace_mu_q(a, few, rng_for("trace-mu-q", a)); });
    add(out, S, a.family, a.N, "transpose-of-powers", [=] { return transpose_of_powers(a, 4); });
  }
  for (int N : {2, 3, 4})
    for (int m = 1; m <= std::min(N, 4); ++m)
      add(out, S, gl, N, "antisymmetrizer-absorbs-m" + num(m), [=] { return antisymmetrizer_absorbs({gl, N}, m); });
  for (Alg a : {Alg{gl, 3}, Alg{o, 4}})
    add(out, S, a.family, a.N, "trace-conjugation",
        [=] { return trace_conjugation(a, 3, std::max(1, options.trials / 50), rng_for("trace-conjugation", a)); });
  for (int N = 1; N <= 5; ++N)
    add(out, S, gl, N, "antisymmetrizer-partial-traces", [=] { return antisymmetrizer_partial_traces({gl, N}); });
  for (Alg a : {Alg{sp, 2}, Alg{sp, 4}, Alg{sp, 6}, Alg{o, 3}, Alg{o, 4}, Alg{o, 5}, Alg{oc, 4}})
    add(out, S, a.family, a.N, "antisymmetrizer-phi-chain", [=] { return antisymmetrizer_phi_chain(a, std::min(a.N, 4)); });
  for (Alg a : {Alg{o, 3}, Alg{o, 4}, Alg{o, 5}, Alg{oc, 4}})
    add(out, S, a.family, a.N, "brauer-symmetrizer", [=] { return brauer_properties(a, 4); });
  for (Alg a : {Alg{sp, 4}, Alg{sp, 6}})
    add(out, S, a.family, a.N, "brauer-symmetrizer", [=] { return brauer_properties(a, a.N / 2); });
  for (int N : {2, 3}) add(out, S, gl, N, "derivative-of-powers", [=] { return derivative_of_powers({gl, N}, 4); });
  for (Alg a : {Alg{o, 3}, Alg{o, 4}, Alg{o, 5}, Alg{sp, 2}, Alg{sp, 4}})
    add(out, S, a.family, a.N, "derivative-of-powers", [=] { return derivative_of_powers(a, 4); });
  for (Alg a : {Alg{o, 3}, Alg{o, 4}, Alg{sp, 2}, Alg{sp, 4}})
    add(out, S, a.family, a.N, "reordering", [=] { return reordering(a, 3); });
  add(out, S, gl, 3, "reduced-traces", [] { return reduced_traces({gl, 3}, 4); });
}

}  // namespace qshift::detail
