#include <map>

#include "checks.hpp"
#include "qshift/generators.hpp"
#include "qshift/quasi_derivation.hpp"
#include "qshift/text.hpp"

namespace qshift::detail {

namespace {

using Body = std::function<Outcome()>;

struct Alg {
  Family family;
  int N;
};

constexpr Family gl = Family::gl, o = Family::orthogonal_split, sp = Family::symplectic_split,
                 oc = Family::orthogonal_canonical;

AlgebraPtr build(Alg a) { return LieAlgebra::build(a.family, a.N); }

std::string ij_name(const LieAlgebra& alg, int i, int j) {
  return std::string(1, alg.letter()) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

Outcome consistency(Alg a, int trials, std::uint64_t seed, DerivationKind kind) {
  const ConsistencyReport r = leibniz_consistency_check(build(a), trials, seed, kind);
  const std::string ev = std::to_string(r.trials) + " pairs, " + std::to_string(r.violations) + " violations";
  if (r.violations > 0) return {r.witness, ev};
  return {std::nullopt, ev};
}

// Terms of x that commute with every diagonal generator.
UElement weight_zero_part(const UElement& x) {
  const AlgebraPtr& alg = x.algebra();
  UElement out(alg);
  for (const auto& [m, c] : x.terms()) {
    UElement term(alg);
    term.add_term(m, c);
    bool zero_weight = true;
    for (int i = 0; i < t_element_count(*alg) && zero_weight; ++i)
      zero_weight = commutator(UElement::matrix_entry(alg, i, i), term).is_zero();
    if (zero_weight) out += term;
  }
  return out;
}

Tensor D1(const UElement& x) { return Tensor::from_element(x).apply_D(0); }
Tensor D0D1(const UElement& x) { return Tensor::from_element(x).apply_D(0).apply_D(0); }
Tensor tensor_commutator(const Tensor& a, const Tensor& b) { return a * b - b * a; }

// tr_1 mu_1 [D_1 T_i, D_1 x] and tr_01 mu_0 mu_1 [D_0 D_1 T_i, D_0 D_1 x] for all i.
Outcome proof_identities(Alg a, const UElement& z, int p_max, bool two_slot) {
  const ShiftMatrix mu = ShiftMatrix::generic(build(a));
  const AlgebraPtr& alg = mu.algebra();
  const Tensor mu1 = Tensor::constant_matrix(alg, 1, 0, mu.entries());
  const Tensor mu01 = Tensor::constant_matrix(alg, 2, 0, mu.entries()) * Tensor::constant_matrix(alg, 2, 1, mu.entries());
  UElement x = z;
  for (int p = 0; p <= p_max; ++p) {
    if (p > 0) x = d_mu(mu, x);
    for (int i = 0; i < t_element_count(*alg); ++i) {
      const UElement t = t_element(mu, i);
      const UElement v = two_slot ? (mu01 * tensor_commutator(D0D1(t), D0D1(x))).full_trace()
                                  : (mu1 * tensor_commutator(D1(t), D1(x))).full_trace();
      if (!v.is_zero())
        return {"p = " + std::to_string(p) + ", i = " + std::to_string(i + 1) + ": " + v.to_string(), std::nullopt};
    }
  }
  return {};
}

using GenMap = std::map<GenId, Scalar>;

void accumulate(GenMap& into, const LinearCombo& lc, const Scalar& c) {
  for (const auto& t : lc) {
    Scalar& v = into[t.gen];
    v += c * t.coeff;
    if (is_zero(v)) into.erase(t.gen);
  }
}

Outcome jacobi(Alg a) {
  const AlgebraPtr alg = build(a);
  const auto G = static_cast<GenId>(alg->num_generators());
  for (GenId x = 0; x < G; ++x)
    for (GenId y = 0; y < G; ++y) {
      GenMap s;
      accumulate(s, alg->bracket(x, y), 1);
      accumulate(s, alg->bracket(y, x), 1);
      if (!s.empty())
        return {"[" + generator_name(*alg, x) + ", " + generator_name(*alg, y) + "] is not antisymmetric", std::nullopt};
    }
  for (GenId x = 0; x < G; ++x)
    for (GenId y = x + 1; y < G; ++y)
      for (GenId z = y + 1; z < G; ++z) {
        GenMap s;
        for (const auto& t : alg->bracket(x, y)) accumulate(s, alg->bracket(t.gen, z), t.coeff);
        for (const auto& t : alg->bracket(y, z)) accumulate(s, alg->bracket(t.gen, x), t.coeff);
        for (const auto& t : alg->bracket(z, x)) accumulate(s, alg->bracket(t.gen, y), t.coeff);
        if (!s.empty())
          return {"Jacobi fails on (" + generator_name(*alg, x) + ", " + generator_name(*alg, y) + ", " +
                      generator_name(*alg, z) + ")",
                  std::nullopt};
      }
  return {};
}

using Dense = std::vector<Scalar>;

Dense dense(const LieAlgebra& alg, const std::vector<MatrixEntry>& m) {
  Dense d(static_cast<std::size_t>(alg.N() * alg.N()));
  for (const auto& e : m) d[e.row * alg.N() + e.col] += e.coeff;
  return d;
}

Outcome split_consistency(Alg a) {
  const AlgebraPtr alg = build(a);
  const int N = alg->N();
  const auto G = static_cast<GenId>(alg->num_generators());
  std::vector<Dense> amb;
  for (GenId g = 0; g < G; ++g) amb.push_back(dense(*alg, alg->ambient(g)));
  for (GenId x = 0; x < G; ++x)
    for (GenId y = 0; y < G; ++y) {
      Dense lhs(static_cast<std::size_t>(N * N)), rhs(static_cast<std::size_t>(N * N));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          for (int k = 0; k < N; ++k)
            lhs[i * N + j] += amb[x][i * N + k] * amb[y][k * N + j] - amb[y][i * N + k] * amb[x][k * N + j];
      for (const auto& t : alg->bracket(x, y))
        for (int e = 0; e < N * N; ++e) rhs[e] += t.coeff * amb[t.gen][e];
      if (lhs != rhs)
        return {"[" + generator_name(*alg, x) + ", " + generator_name(*alg, y) + "] differs from the gl_N commutator",
                std::nullopt};
    }
  return {};
}

Outcome confluence(Alg a, int trials, Rng rng) {
  const AlgebraPtr alg = build(a);
  std::uniform_int_distribution<int> len(2, 5);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(alg->num_generators()) - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<GenId> w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = static_cast<GenId>(gen(rng));
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, w.size() - 2)(rng);
    std::vector<GenId> swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    const std::vector<GenId> head(w.begin(), w.begin() + static_cast<long>(k));
    const std::vector<GenId> tail(w.begin() + static_cast<long>(k) + 2, w.end());
    const UElement rhs = normal_form(alg, swapped) + normal_form(alg, head) *
                                                        commutator_generators(alg, w[k], w[k + 1]) *
                                                        normal_form(alg, tail);
    if (auto d = compare(normal_form(alg, w), rhs, "word of length " + std::to_string(w.size())))
      return {d, std::nullopt};
  }
  return {std::nullopt, std::to_string(trials) + " words"};
}

Outcome associativity(Alg a, int trials, Rng rng) {
  const AlgebraPtr alg = build(a);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int t = 0; t < trials; ++t) {
    const UElement f = random_element(alg, rng, 3, 2), g = random_element(alg, rng, 3, 3),
                   h = random_element(alg, rng, 3, 3);
    if (auto d = compare((f * g) * h, f * (g * h), "(fg)h vs f(gh)")) return {d, std::nullopt};
    const Scalar x = small(rng), y = small(rng);
    if (auto d = compare(commutator(x * f + y * g, h), x * commutator(f, h) + y * commutator(g, h), "bilinearity"))
      return {d, std::nullopt};
  }
  return {std::nullopt, std::to_string(trials) + " triples"};
}

Outcome hat_relation(Alg a, int trials, Rng rng) {
  const AlgebraPtr alg = build(a);
  const int N = alg->N();
  for (int t = 0; t < trials; ++t) {
    const UElement f = random_element(alg, rng, 3, 3);
    const UElement wf = transpose_automorphism(f);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (auto d = compare(quasi_derive(f, i, j, DerivationKind::hat), -transpose_automorphism(quasi_derive(wf, j, i)),
                             "hat d_" + std::to_string(i + 1) + std::to_string(j + 1) + " f for f = " + f.to_string()))
          return {d, std::nullopt};
  }
  return {std::nullopt, std::to_string(trials) + " elements"};
}

Outcome d0d1_commute(Alg a, int trials, Rng rng) {
  const AlgebraPtr alg = build(a);
  for (int t = 0; t < trials; ++t) {
    const UElement x = random_element(alg, rng, 3, 3);
    const Tensor base = Tensor::from_element(x).apply_D(0);
    if (auto d = compare(base.apply_D(0), base.apply_D(1), "D_0 D_1 x vs D_1 D_0 x for x = " + x.to_string()))
      return {d, std::nullopt};
  }
  return {std::nullopt, std::to_string(trials) + " elements"};
}

Outcome centrality_stability(Alg a, int trials, Rng rng) {
  const AlgebraPtr alg = build(a);
  const ShiftMatrix mu = ShiftMatrix::generic(alg);
  int used = 0;
  for (int t = 0; t < trials; ++t) {
    const UElement x = weight_zero_part(random_element(alg, rng, 6, 4));
    if (x.is_zero()) continue;
    ++used;
    const UElement y = d_mu(mu, x);
    for (int i = 0; i < t_element_count(*alg); ++i)
      if (auto d = expect_zero(commutator(UElement::matrix_entry(alg, i, i), y),
                               "[" + ij_name(*alg, i, i) + ", D_mu x] for x = " + x.to_string()))
        return {d, std::nullopt};
  }
  return {std::nullopt, std::to_string(used) + " weight-zero elements"};
}

Outcome central_elements(Alg a, int max_m, bool with_psi) {
  const AlgebraPtr alg = build(a);
  const ShiftMatrix mu = ShiftMatrix::generic(alg);
  auto central = [&](const UElement& f, const std::string& what) -> std::optional<std::string> {
    const CheckReport r = is_central(f);
    if (r.pass) return std::nullopt;
    return what + ": " + *r.witness;
  };
  for (int m = 1; m <= max_m; ++m) {
    const std::string ms = std::to_string(m);
    if (auto f = central(phi(mu, m, 0), "phi^(0)_" + ms)) return {f, std::nullopt};
    if (with_psi)
      if (auto f = central(psi(mu, m, 0), "psi^(0)_" + ms)) return {f, std::nullopt};
    if (auto f = central(trace_power(alg, m), "tr F^" + ms)) return {f, std::nullopt};
  }
  if (alg->form() == Form::none)
    if (auto f = central(gelfand_generator(alg, {1, 2}), "tr E tr E^2")) return {f, std::nullopt};
  return {};
}

Outcome t_elements(Alg a) {
  const ShiftMatrix mu = ShiftMatrix::generic(build(a));
  const AlgebraPtr& alg = mu.algebra();
  const int count = t_element_count(*alg);
  for (int i = 0; i < count; ++i) {
    const UElement t = t_element(mu, i);
    const UElement dt = d_mu(mu, t);
    if (!dt.is_scalar()) return {"D_mu T_" + std::to_string(i + 1) + " = " + dt.to_string() + " is not a constant", std::nullopt};
    for (int j = 0; j < count; ++j)
      if (auto d = expect_zero(commutator(UElement::matrix_entry(alg, j, j), t),
                               "[" + ij_name(*alg, j, j) + ", T_" + std::to_string(i + 1) + "]"))
        return {d, std::nullopt};
  }
  return {};
}

// D_0 D_1 T_i = sum_{k != i} (e_ik (x) e_ki + e_ki (x) e_ik) / (mu_i - mu_k).
Outcome t_second_derivative(Alg a) {
  const ShiftMatrix mu = ShiftMatrix::generic(build(a));
  const AlgebraPtr& alg = mu.algebra();
  const int N = alg->N();
  for (int i = 0; i < N; ++i) {
    Tensor expected(alg, 2);
    for (int k = 0; k < N; ++k) {
      if (k == i) continue;
      const Scalar c = 1 / (mu(i, i) - mu(k, k));
      expected.add_entry(expected.pack({i, k}), expected.pack({k, i}), c);
      expected.add_entry(expected.pack({k, i}), expected.pack({i, k}), c);
    }
    if (auto d = compare(D0D1(t_element(mu, i)), expected, "D_0 D_1 T_" + std::to_string(i + 1)))
      return {d, std::nullopt};
  }
  return {};
}

}  // namespace

void add_identity_checks(std::vector<CheckEntry>& out, const SuiteOptions& options) {
  const Suite S = Suite::identities;
  const int trials = options.trials;
  const int few = std::max(1, trials / 10);
  const std::uint64_t seed = options.seed;
  auto rng_for = [seed](const std::string& name, Alg a) { return check_rng(seed, name + ":" + build(a)->name()); };

  for (Alg a : {Alg{gl, 2}, Alg{gl, 3}, Alg{o, 4}, Alg{o, 5}, Alg{sp, 4}})
    add(out, S, a.family, a.N, "leibniz-consistency",
        [=] { return consistency(a, trials, seed, DerivationKind::standard); });
  for (Alg a : {Alg{o, 3}, Alg{sp, 2}, Alg{oc, 4}, Alg{gl, 4}, Alg{o, 6}, Alg{sp, 6}})
    add(out, S, a.family, a.N, "leibniz-consistency", [=] { return consistency(a, few, seed, DerivationKind::standard); });
  for (Alg a : {Alg{gl, 2}, Alg{gl, 3}})
    add(out, S, a.family, a.N, "leibniz-consistency-hat", [=] { return consistency(a, few, seed, DerivationKind::hat); });
  for (Alg a : {Alg{gl, 2}, Alg{gl, 3}}) {
    add(out, S, a.family, a.N, "hat-relation", [=] { return hat_relation(a, few, rng_for("hat-relation", a)); });
  }
  for (Alg a : {Alg{gl, 3}, Alg{o, 4}, Alg{sp, 4}, Alg{oc, 4}})
    add(out, S, a.family, a.N, "d0d1-commute", [=] { return d0d1_commute(a, few, rng_for("d0d1-commute", a)); });
  for (Alg a : {Alg{gl, 3}, Alg{o, 5}, Alg{sp, 4}})
    add(out, S, a.family, a.N, "centrality-stability",
        [=] { return centrality_stability(a, few, rng_for("centrality-stability", a)); });

  // identities behind the induction on p for D_mu^p z
  {
    const Alg a{gl, 3};
    struct Z {
      std::string name;
      std::function<UElement()> make;
    };
    const std::vector<Z> zs = {
        {"trE2", [a] { return trace_power(build(a), 2); }},
        {"trE3", [a] { return trace_power(build(a), 3); }},
        {"phi0_2", [a] { return phi(ShiftMatrix::generic(build(a)), 2, 0); }},
    };
    for (const auto& z : zs) {
      add(out, S, a.family, a.N, "modz-" + z.name, [=] { return proof_identities(a, z.make(), 0, false); });
      add(out, S, a.family, a.N, "modzk-" + z.name, [=] { return proof_identities(a, z.make(), 2, false); });
      add(out, S, a.family, a.N, "modux-" + z.name, [=] { return proof_identities(a, z.make(), 2, true); });
    }
    add(out, S, a.family, a.N, "t-second-derivative", [=] { return t_second_derivative(a); });
  }
  for (Alg a : {Alg{gl, 3}, Alg{o, 5}, Alg{sp, 4}})
    add(out, S, a.family, a.N, "t-elements", [=] { return t_elements(a); });

  // structure of the algebras themselves
  for (Alg a : {Alg{gl, 2}, Alg{gl, 3}, Alg{gl, 4}, Alg{gl, 5}, Alg{gl, 6}, Alg{o, 3}, Alg{o, 4}, Alg{o, 5}, Alg{o, 6},
                Alg{sp, 2}, Alg{sp, 4}, Alg{sp, 6}, Alg{oc, 4}, Alg{oc, 6}}) {
    add(out, S, a.family, a.N, "jacobi", [=] { return jacobi(a); });
    add(out, S, a.family, a.N, "split-consistency", [=] { return split_consistency(a); });
  }
  for (Alg a : {Alg{gl, 2}, Alg{gl, 3}, Alg{o, 4}, Alg{o, 5}, Alg{sp, 4}, Alg{oc, 4}}) {
    add(out, S, a.family, a.N, "confluence", [=] { return confluence(a, trials, rng_for("confluence", a)); });
    add(out, S, a.family, a.N, "associativity", [=] { return associativity(a, few, rng_for("associativity", a)); });
  }

  // centrality of the generators of the center
  for (int N : {2, 3, 4}) add(out, S, gl, N, "central-elements", [=] { return central_elements({gl, N}, N, true); });
  for (Alg a : {Alg{o, 3}, Alg{o, 4}, Alg{o, 5}, Alg{sp, 2}, Alg{sp, 4}, Alg{oc, 4}})
    add(out, S, a.family, a.N, "central-elements", [=] { return central_elements(a, std::min(a.N, 4), false); });

  add_tensor_identity_checks(out, options);
}

}  // namespace qshift::detail
