#include "qshift/verify.hpp"

#include <chrono>

#include <json.hpp>

#include "check_util.hpp"
#include "qshift/linear_span.hpp"
#include "qshift/quasi_derivation.hpp"
#include "qshift/tensor.hpp"
#include "qshift/text.hpp"

namespace qshift {

std::string CheckReport::to_json() const {
  nlohmann::json doc;
  doc["check"] = check;
  doc["status"] = pass ? "pass" : "fail";
  doc["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
  doc["ms"] = ms;
  if (evidence) doc["evidence"] = *evidence;
  return doc.dump();
}

namespace detail {

CheckReport timed(const std::string& id, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.check = id;
  try {
    Outcome out = body();
    report.pass = !out.failure.has_value();
    report.witness = std::move(out.failure);
    report.evidence = std::move(out.evidence);
  } catch (const Error& e) {
    report.pass = false;
    report.witness = std::string("error: ") + e.what();
  }
  report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<std::string> compare(const UElement& lhs, const UElement& rhs, const std::string& what) {
  const UElement diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  return what + ": lhs - rhs = " + diff.to_string();
}

std::optional<std::string> compare(const Tensor& lhs, const Tensor& rhs, const std::string& what) {
  if (lhs.slots() != rhs.slots()) return what + ": slot counts differ";
  const Tensor diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const auto& [key, value] = *diff.entries().begin();
  std::string row, col;
  for (int d : diff.unpack(key.first)) row += std::to_string(d + 1);
  for (int d : diff.unpack(key.second)) col += std::to_string(d + 1);
  return what + ": lhs - rhs has " + std::to_string(diff.size()) + " nonzero entries, e.g. (" + row + "|" + col +
         ") = " + value.to_string();
}

std::optional<std::string> expect_zero(const UElement& x, const std::string& what) {
  if (x.is_zero()) return std::nullopt;
  return what + " = " + x.to_string();
}

std::optional<std::string> criterion_failure(const ShiftMatrix& mu, const UElement& f) {
  mu.require_generic_diagonal();
  const AlgebraPtr alg = common_algebra(mu.algebra(), f.algebra());
  const char L = alg->letter();
  for (int i = 0; i < t_element_count(*alg); ++i) {
    const std::string idx = std::to_string(i + 1);
    const UElement h = commutator(UElement::matrix_entry(alg, i, i), f);
    if (!h.is_zero()) return "[" + std::string(1, L) + "[" + idx + "," + idx + "], f] = " + h.to_string();
    const UElement t = commutator(t_element(mu, i), f);
    if (!t.is_zero()) return "[T_" + idx + ", f] = " + t.to_string();
  }
  return std::nullopt;
}

}  // namespace detail

CheckReport is_central(const UElement& f, const std::string& id) {
  return detail::timed(id, [&]() -> detail::Outcome {
    const AlgebraPtr& alg = f.algebra();
    if (!alg) return {};
    for (std::size_t g = 0; g < alg->num_generators(); ++g) {
      const UElement c = commutator(UElement::generator(alg, static_cast<GenId>(g)), f);
      if (!c.is_zero())
        return {"[" + generator_name(*alg, static_cast<GenId>(g)) + ", f] = " + c.to_string(), std::nullopt};
    }
    return {};
  });
}

CheckReport amu_membership_criterion(const ShiftMatrix& mu, const UElement& f, const std::string& id) {
  mu.require_generic_diagonal();
  return detail::timed(id, [&]() -> detail::Outcome { return {detail::criterion_failure(mu, f), std::nullopt}; });
}

CheckReport pairwise_commuting(const GeneratorFamily& family, const std::string& id) {
  return detail::timed(id, [&]() -> detail::Outcome {
    const auto& mem = family.members;
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = a + 1; b < mem.size(); ++b) {
        const UElement c = commutator(mem[a].element, mem[b].element);
        if (!c.is_zero())
          return {"[" + mem[a].label.to_string() + ", " + mem[b].label.to_string() + "] = " + c.to_string(),
                  std::nullopt};
      }
    return {};
  });
}

CheckReport check_theorem_A(const ShiftMatrix& mu, const UElement& z, int p_max, const std::string& id, bool hat) {
  mu.require_generic_diagonal();
  return detail::timed(id, [&]() -> detail::Outcome {
    UElement x = z;
    for (int p = 0; p <= p_max; ++p) {
      if (p > 0) x = hat ? d_mu_hat(mu, x) : d_mu(mu, x);
      if (auto fail = detail::criterion_failure(mu, x)) return {"p = " + std::to_string(p) + ": " + *fail, std::nullopt};
    }
    return {};
  });
}

CheckReport check_bcd_single_step(const ShiftMatrix& mu, const UElement& z, const std::string& id) {
  if (mu.algebra()->form() == Form::none) throw Error("the single-step check is for orthogonal and symplectic types");
  mu.require_generic_diagonal();
  return detail::timed(id, [&]() -> detail::Outcome {
    if (auto fail = detail::criterion_failure(mu, z)) return {"z is not in the commutant: " + *fail, std::nullopt};
    return {detail::criterion_failure(mu, d_mu(mu, z)), std::nullopt};
  });
}

namespace detail {

std::vector<Scalar> matrix_square(const ShiftMatrix& mu) {
  const int N = mu.N();
  std::vector<Scalar> sq(static_cast<std::size_t>(N * N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) sq[i * N + j] += mu(i, k) * mu(k, j);
  return sq;
}

CubedCasimirData cubed_casimir_data(int N) {
  const AlgebraPtr alg = LieAlgebra::build(Family::orthogonal_split, N);
  const ShiftMatrix mu = ShiftMatrix::generic(alg);
  auto F = [&](int i, int j) { return UElement::matrix_entry(alg, i - 1, j - 1); };
  const int p2 = N - 1;  // 2' as a 1-based index
  CubedCasimirData d;
  d.coefficient = F(1, 2) * F(2, 3) * F(3, 1) - F(1, 3) * F(3, 2) * F(2, 1) + F(1, p2) * F(3, 2) * F(3, 1) -
                  F(1, 3) * F(2, 3) * F(p2, 1);
  const UElement c2 = trace_power(alg, 2);
  d.image = d_mu_iterate(mu, c2 * c2 * c2, 2);
  d.commutator = commutator(t_element(mu, 0), d.image);
  return d;
}

std::optional<Scalar> congruence_constant(const ShiftMatrix& mu, const UElement& x, const UElement& y) {
  const AlgebraPtr alg = common_algebra(x.algebra(), y.algebra());
  SparseVector target, basis;
  for (int i = 0; i < t_element_count(*alg); ++i) {
    const UElement gs[2] = {UElement::matrix_entry(alg, i, i), t_element(mu, i)};
    for (int s = 0; s < 2; ++s) {
      const std::string tag = std::to_string(2 * i + s) + ":";
      for (const auto& [key, c] : flatten(commutator(gs[s], x))) target.emplace(tag + key, c);
      for (const auto& [key, c] : flatten(commutator(gs[s], y))) basis.emplace(tag + key, c);
    }
  }
  const SpanSolution sol = solve_in_span(target, {basis});
  if (!sol.in_span) return std::nullopt;
  return sol.coefficients[0];
}

std::string summarize(const UElement& x, std::size_t max_terms) {
  const auto terms = x.sorted_terms();
  if (terms.size() <= max_terms) return x.to_string();
  UElement head(x.algebra());
  for (std::size_t k = 0; k < max_terms; ++k) head.add_term(terms[k].first, terms[k].second);
  return head.to_string() + " + ... (" + std::to_string(terms.size()) + " terms)";
}

}  // namespace detail

CheckReport counterexample_cubed_quadratic_casimir(int N) {
  return detail::timed("counterexample-cubed-casimir:o_" + std::to_string(N), [&]() -> detail::Outcome {
    if (N < 5) throw Error("the counterexample is stated for N >= 5");
    const detail::CubedCasimirData d = detail::cubed_casimir_data(N);
    if (d.coefficient.is_zero()) return {"the mu_2-coefficient vanishes in PBW form", std::nullopt};
    if (d.commutator.is_zero()) return {"[T_1, D_mu^2 (tr F^2)^3] vanishes", std::nullopt};
    return {std::nullopt, "mu_2-coefficient = " + d.coefficient.to_string() +
                              "; [T_1, D_mu^2 (tr F^2)^3] = " + detail::summarize(d.commutator)};
  });
}

CheckReport counterexample_shift_not_preserved(int N) {
  return detail::timed("counterexample-not-preserved:gl_" + std::to_string(N), [&]() -> detail::Outcome {
    const AlgebraPtr alg = LieAlgebra::build(Family::gl, N);
    const ShiftMatrix mu = ShiftMatrix::generic(alg);
    const UElement y = trace_matrix_power(alg, detail::matrix_square(mu), 2);
    const UElement x = d_mu(mu, trace_matrix_power(alg, mu.entries(), 1) * trace_power(alg, 3));
    const auto y_fail = detail::criterion_failure(mu, y);
    if (!y_fail) return {"tr mu^2 E^2 passes the membership criterion", std::nullopt};
    const auto c_opt = detail::congruence_constant(mu, x, y);
    if (!c_opt) return {"D_mu(tr mu E tr E^3) is not a multiple of tr mu^2 E^2 modulo the commutant", std::nullopt};
    const Scalar c = *c_opt;
    if (is_zero(c)) return {"D_mu(tr mu E tr E^3) lies in the commutant", std::nullopt};
    // The correction term of the Leibniz rule, tr mu_0 mu_1 P_01 (P_02 E_2^2 + E_2 P_02 E_2 + E_2^2 P_02),
    // reduces to 3 tr mu^2 E^2.
    const Tensor mu0 = Tensor::constant_matrix(alg, 3, 0, mu.entries());
    const Tensor mu1 = Tensor::constant_matrix(alg, 3, 1, mu.entries());
    const Tensor E2 = Tensor::generator_matrix(alg, 3, 2), P02 = Tensor::P(alg, 3, 0, 2);
    const UElement correction =
        (mu0 * mu1 * Tensor::P(alg, 3, 0, 1) * (P02 * E2 * E2 + E2 * P02 * E2 + E2 * E2 * P02)).full_trace();
    if (auto fail = detail::criterion_failure(mu, correction - 3 * y))
      return {"correction term differs from 3 tr mu^2 E^2 modulo the commutant: " + *fail, std::nullopt};
    std::string evidence = "D_mu(tr mu E tr E^3) = " + format_scalar(c) +
                           " tr mu^2 E^2 modulo the commutant; the correction term equals 3 tr mu^2 E^2 and enters with "
                           "the sign of the Leibniz correction; " + *y_fail;
    if (auto fail = detail::criterion_failure(mu, x + correction))
      return {"D_mu(tr mu E tr E^3) differs from minus the correction term: " + *fail, evidence};
    return {std::nullopt, evidence};
  });
}

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "identities") return Suite::identities;
  if (name == "theorems") return Suite::theorems;
  if (name == "counterexamples") return Suite::counterexamples;
  throw Error("unknown suite '" + name + "' (expected all, identities, theorems or counterexamples)");
}

std::vector<CheckReport> run_checks(const SuiteOptions& options, const std::function<void(const CheckReport&)>& sink) {
  std::vector<CheckReport> reports;
  for (const auto& entry : select_checks(options)) {
    CheckReport r = entry.run();
    if (sink) sink(r);
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace qshift
