#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshift/generators.hpp"
#include "qshift/linear_span.hpp"
#include "qshift/quasi_derivation.hpp"
#include "qshift/tensor.hpp"
#include "qshift/text.hpp"
#include "qshift/verify.hpp"

using namespace qshift;

namespace {

UElement el(const AlgebraPtr& alg, const char* s) { return parse_element(alg, s); }

bool central(const UElement& f) { return is_central(f).pass; }

ShiftMatrix canonical_mu(const AlgebraPtr& alg, const std::vector<std::tuple<int, int, int>>& pairs) {
  std::vector<Scalar> e(static_cast<std::size_t>(alg->N() * alg->N()));
  for (auto [i, j, v] : pairs) {
    e[static_cast<std::size_t>(i * alg->N() + j)] = v;
    e[static_cast<std::size_t>(j * alg->N() + i)] = -v;
  }
  return ShiftMatrix(alg, e);
}

}  // namespace

TEST_CASE("Gelfand generators") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(gelfand_generator(gl2, {}) == UElement::one(gl2));
  CHECK(gelfand_generator(gl2, {1}) == el(gl2, "E[1,1] + E[2,2]"));
  CHECK(gelfand_generator(gl2, {2}) == el(gl2, "E[1,1]^2 + E[2,2]^2 + E[1,2]E[2,1] + E[2,1]E[1,2]"));
}

TEST_CASE("centrality") {
  for (auto fam : {std::pair{Family::gl, 3}, {Family::orthogonal_split, 4}, {Family::orthogonal_split, 5},
                   {Family::symplectic_split, 4}, {Family::orthogonal_canonical, 4}}) {
    const auto alg = LieAlgebra::build(fam.first, fam.second);
    const ShiftMatrix mu = ShiftMatrix::generic(alg);
    for (int p = 1; p <= 3; ++p) CHECK(central(trace_power(alg, p)));
    for (int m = 1; m <= 3; ++m) CHECK(central(phi(mu, m, 0)));
  }
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  for (int m = 1; m <= 3; ++m) CHECK(central(psi(ShiftMatrix::generic(gl3), m, 0)));
  CHECK_FALSE(central(el(gl3, "E[1,2]")));
}

TEST_CASE("phi and psi examples") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const ShiftMatrix mu = ShiftMatrix::diagonal(gl2, {1, 2});
  const UElement trE = el(gl2, "E[1,1] + E[2,2]"), trmuE = el(gl2, "E[1,1] + 2*E[2,2]");
  CHECK(phi(mu, 1, 0) == trE);
  CHECK(phi(mu, 2, 1) == Scalar(1) / 2 * (Scalar(3) * trE - trmuE));
  CHECK(psi(mu, 1, 0) == trE);
  CHECK(psi(mu, 1, 1) == UElement::scalar(gl2, 3));
  CHECK(psi(mu, 2, 1) == Scalar(1) / 2 * (Scalar(3) * trE + trmuE));
  // k = m gives the scalar tr A^(m) mu_1 ... mu_m = e_2(1, 2)
  CHECK(phi(mu, 2, 2) == UElement::scalar(gl2, 2));
  CHECK_THROWS_AS(phi(mu, 2, 3), Error);
  CHECK_THROWS_AS(phi(mu, 3, 0), Error);
}

TEST_CASE("symplectic phi: antisymmetrizer and Brauer forms agree for m <= n") {
  const auto sp4 = LieAlgebra::build(Family::symplectic_split, 4);
  const ShiftMatrix mu = ShiftMatrix::generic(sp4);
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k <= m; ++k) CHECK(phi(mu, m, k) == phi_brauer(mu, m, k));
}

TEST_CASE("T elements") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const ShiftMatrix mu = ShiftMatrix::diagonal(gl2, {1, 2});
  CHECK(t_element(mu, 0) == el(gl2, "-E[1,2]E[2,1]"));
  CHECK(commutator(el(gl2, "E[1,1]"), t_element(mu, 0)).is_zero());
  CHECK_THROWS_AS(t_element(ShiftMatrix::diagonal(gl2, {1, 1}), 0), Error);
  const auto o5 = LieAlgebra::build(Family::orthogonal_split, 5);
  CHECK(t_element_count(*o5) == 2);
  CHECK(t_element_count(*LieAlgebra::build(Family::gl, 3)) == 3);
}

TEST_CASE("Pfaffian") {
  const auto oc2 = LieAlgebra::build(Family::orthogonal_canonical, 2);
  CHECK(pfaffian(oc2) == el(oc2, "F[1,2]"));
  const auto oc4 = LieAlgebra::build(Family::orthogonal_canonical, 4);
  CHECK(pfaffian(oc4) == el(oc4, "F[1,2]F[3,4] - F[1,3]F[2,4] + F[1,4]F[2,3]"));
  CHECK(central(pfaffian(oc4)));
  CHECK(central(pfaffian(LieAlgebra::build(Family::orthogonal_canonical, 6))));
  CHECK(central(pfaffian(LieAlgebra::build(Family::orthogonal_split, 4))));
  CHECK(central(pfaffian(LieAlgebra::build(Family::orthogonal_split, 6))));
  CHECK_THROWS_AS(pfaffian(LieAlgebra::build(Family::orthogonal_split, 5)), Error);
}

TEST_CASE("Pfaffian shift coefficients") {
  const auto oc2 = LieAlgebra::build(Family::orthogonal_canonical, 2);
  const auto n1 = pf_shift_coeffs(canonical_mu(oc2, {{0, 1, 5}}));
  REQUIRE(n1.size() == 2);
  CHECK(n1[0] == el(oc2, "F[1,2]"));
  CHECK(n1[1] == UElement::scalar(oc2, 5));
  const auto oc4 = LieAlgebra::build(Family::orthogonal_canonical, 4);
  const auto zero = pf_shift_coeffs(ShiftMatrix::zero(oc4));
  REQUIRE(zero.size() == 3);
  CHECK(zero[0] == pfaffian(oc4));
  CHECK(zero[1].is_zero());
  CHECK(zero[2].is_zero());
  CHECK(pf_shift_coeffs(canonical_mu(oc4, {{0, 1, 1}}))[1] == el(oc4, "F[3,4]"));
}

TEST_CASE("Pfaffian matrix relation in U(o_2n)") {
  for (int N : {4, 6}) {
    const auto alg = LieAlgebra::build(Family::orthogonal_canonical, N);
    const UMatrix F = UMatrix::generators(alg), Pi = pfaffian_derivative_matrix(alg);
    const UElement pf = pfaffian(alg);
    UMatrix expected = Scalar(N / 2 - 1) * Pi;
    for (int i = 0; i < N; ++i) expected(i, i) += pf;
    CHECK(F * Pi == expected);
    CHECK(Pi * F == expected);
  }
}

TEST_CASE("the relation F Pi = -Pf F . 1 does not hold in U(o_4)") {
  const auto oc4 = LieAlgebra::build(Family::orthogonal_canonical, 4);
  const UMatrix FPi = UMatrix::generators(oc4) * pfaffian_derivative_matrix(oc4);
  CHECK(FPi(0, 0) == pfaffian(oc4));
  CHECK_FALSE(FPi(0, 0) == -pfaffian(oc4));
  CHECK_FALSE(FPi(0, 1).is_zero());
}

TEST_CASE("D_mu^p Pf F is proportional to pi^(p)") {
  const auto oc4 = LieAlgebra::build(Family::orthogonal_canonical, 4);
  const ShiftMatrix mu = ShiftMatrix::generic(oc4);
  const auto pi = pf_shift_coeffs(mu);
  CHECK(d_mu(mu, pi[0]) == Scalar(2) * pi[1]);
  const auto oc6 = LieAlgebra::build(Family::orthogonal_canonical, 6);
  const ShiftMatrix mu6 = ShiftMatrix::generic(oc6);
  const auto pi6 = pf_shift_coeffs(mu6);
  CHECK(d_mu(mu6, pi6[0]) == Scalar(2) * pi6[1]);
  CHECK(d_mu_iterate(mu6, pi6[0], 2) == Scalar(8) * pi6[2]);
}

TEST_CASE("generating families") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const GeneratorFamily f2 = amu_generating_family(ShiftMatrix::generic(gl2));
  CHECK(f2.members.size() == 3);
  CHECK(pairwise_commuting(f2).pass);
  const auto o4 = LieAlgebra::build(Family::orthogonal_canonical, 4);
  const GeneratorFamily f4 = amu_generating_family(ShiftMatrix::generic(o4));
  int pi_members = 0;
  for (const auto& m : f4.members) pi_members += m.label.kind == "pi";
  CHECK(pi_members == 2);
  CHECK(pairwise_commuting(f4).pass);
  const auto sp2 = LieAlgebra::build(Family::symplectic_split, 2);
  CHECK(amu_generating_family(ShiftMatrix::generic(sp2)).members.size() == 2);
  const std::string json = family_to_json(f2);
  CHECK(json.find("\"label\"") != std::string::npos);
  CHECK(json.find("\"element\"") != std::string::npos);
}

TEST_CASE("type A recurrence for D_mu phi has nonzero coefficients") {
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  const ShiftMatrix mu = ShiftMatrix::generic(gl3);
  const SpanSolution s = solve_in_span(d_mu(mu, phi(mu, 2, 0)), {phi(mu, 1, 1), phi(mu, 2, 1)});
  REQUIRE(s.in_span);
  CHECK(s.coefficients[0] == 1);
  CHECK(s.coefficients[1] == 2);
  const SpanSolution t = solve_in_span(d_mu(mu, phi(mu, 3, 0)), {phi(mu, 1, 1), phi(mu, 2, 1), phi(mu, 3, 1)});
  REQUIRE(t.in_span);
  CHECK(t.coefficients[0] == Scalar(1) / 3);
  CHECK(t.coefficients[1] == 1);
  CHECK(t.coefficients[2] == 3);
}
