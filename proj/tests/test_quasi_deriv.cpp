#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshift/generators.hpp"
#include "qshift/quasi_derivation.hpp"
#include "qshift/random.hpp"
#include "qshift/text.hpp"

using namespace qshift;

namespace {

UElement el(const AlgebraPtr& alg, const char* s) { return parse_element(alg, s); }

}  // namespace

TEST_CASE("derivatives of generators are Kronecker deltas for gl_N") {
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const UElement d = quasi_derive(UElement::matrix_entry(gl3, k, l), i, j);
          CHECK(d == UElement::scalar(gl3, (k == j && i == l) ? 1 : 0));
        }
}

TEST_CASE("quantum Leibniz rule on a square") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(quasi_derive(el(gl2, "E[1,1]^2"), 0, 0) == el(gl2, "2*E[1,1] - 1"));
  CHECK(quasi_derive(UElement::one(gl2), 0, 1).is_zero());
}

TEST_CASE("canonical o_2n derivatives") {
  const auto oc4 = LieAlgebra::build(Family::orthogonal_canonical, 4);
  // d_ij F_kl = delta_kj delta_il - delta_ki delta_jl
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const int expected = (k == j && i == l) - (k == i && j == l);
          CHECK(quasi_derive(UElement::matrix_entry(oc4, k, l), i, j) == UElement::scalar(oc4, expected));
        }
}

TEST_CASE("D_mu examples") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const ShiftMatrix mu = ShiftMatrix::diagonal(gl2, {1, 2});
  CHECK(d_mu(mu, el(gl2, "E[1,1] + E[2,2]")) == UElement::scalar(gl2, 3));
  CHECK(d_mu(mu, UElement::one(gl2)).is_zero());
  CHECK(d_mu(mu, el(gl2, "E[1,1]")) == UElement::one(gl2));
  CHECK(d_mu_iterate(mu, el(gl2, "E[1,2]E[2,1]"), 0) == el(gl2, "E[1,2]E[2,1]"));
  CHECK(d_mu_iterate(mu, el(gl2, "E[1,1] + E[2,2]"), 2).is_zero());
}

TEST_CASE("D_mu T_i is a constant") {
  for (auto fam : {std::pair{Family::gl, 3}, {Family::orthogonal_split, 5}, {Family::symplectic_split, 4}}) {
    const auto alg = LieAlgebra::build(fam.first, fam.second);
    const ShiftMatrix mu = ShiftMatrix::generic(alg);
    for (int i = 0; i < t_element_count(*alg); ++i) CHECK(d_mu(mu, t_element(mu, i)).is_scalar());
  }
}

TEST_CASE("generic shift matrices") {
  const ShiftMatrix o4 = ShiftMatrix::generic(LieAlgebra::build(Family::orthogonal_split, 4));
  CHECK(o4(0, 0) == 1);
  CHECK(o4(1, 1) == 2);
  CHECK(o4(2, 2) == -2);
  CHECK(o4(3, 3) == -1);
  const ShiftMatrix o5 = ShiftMatrix::generic(LieAlgebra::build(Family::orthogonal_split, 5));
  CHECK(o5(2, 2) == 0);
  const ShiftMatrix gl3 = ShiftMatrix::generic(LieAlgebra::build(Family::gl, 3));
  CHECK(gl3(2, 2) == 3);
}

TEST_CASE("shift matrix validation") {
  const auto o4 = LieAlgebra::build(Family::orthogonal_split, 4);
  CHECK_THROWS_AS(ShiftMatrix::diagonal(o4, {1, 2, 3, 4}), Error);
  const auto oc4 = LieAlgebra::build(Family::orthogonal_canonical, 4);
  std::vector<Scalar> sym(16, Scalar(0));
  sym[1] = sym[4] = 1;
  CHECK_THROWS_AS(ShiftMatrix(oc4, sym), Error);
  const std::string good = R"({"family":"gl2","N":2,"entries":[["1","0"],["0","2"]]})";
  const ShiftMatrix parsed = parse_shift_matrix_json(good);
  CHECK(parsed(1, 1) == 2);
  CHECK(parse_shift_matrix_json(shift_matrix_to_json(parsed)).entries() == parsed.entries());
  CHECK_THROWS(parse_shift_matrix_json(R"({"family":"gl2","N":2,"entries":[["1","0"]]})"));
  CHECK_THROWS(parse_shift_matrix_json(R"({"family":"gl2","N":2,"entries":[["1","x"],["0","2"]]})"));
  CHECK_THROWS(parse_shift_matrix_json("not json"));
}

TEST_CASE("hat derivations are gl_N only") {
  const auto o4 = LieAlgebra::build(Family::orthogonal_split, 4);
  CHECK_THROWS_AS(quasi_derive(el(o4, "F[1,2]"), 0, 1, DerivationKind::hat), Error);
}

TEST_CASE("property: Leibniz consistency on random pairs") {
  for (auto fam : {std::pair{Family::gl, 2}, {Family::gl, 3}, {Family::orthogonal_split, 4},
                   {Family::orthogonal_split, 5}, {Family::symplectic_split, 4}, {Family::orthogonal_canonical, 4}}) {
    const auto alg = LieAlgebra::build(fam.first, fam.second);
    const ConsistencyReport r = leibniz_consistency_check(alg, 50, 99);
    CHECK(r.trials == 50);
    CHECK_MESSAGE(r.violations == 0, alg->name() << ": " << r.witness);
  }
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(leibniz_consistency_check(el(gl2, "E[1,2]"), el(gl2, "E[2,1]")).violations == 0);
  CHECK(leibniz_consistency_check(UElement::one(gl2), UElement::one(gl2)).violations == 0);
  CHECK(leibniz_consistency_check(gl2, 20, 5, DerivationKind::hat).violations == 0);
}

TEST_CASE("property: hat derivation relation") {
  Rng rng(3);
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  for (int t = 0; t < 20; ++t) {
    const UElement f = random_element(gl3, rng, 4, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const UElement hat = quasi_derive(f, i, j, DerivationKind::hat);
        const UElement via = -transpose_automorphism(quasi_derive(transpose_automorphism(f), j, i));
        CHECK(hat == via);
      }
  }
}

TEST_CASE("property: D_mu is linear and kills constants") {
  Rng rng(5);
  const auto sp4 = LieAlgebra::build(Family::symplectic_split, 4);
  for (int t = 0; t < 20; ++t) {
    const ShiftMatrix mu = random_shift_matrix(sp4, rng);
    const UElement f = random_element(sp4, rng, 3, 3), g = random_element(sp4, rng, 3, 3);
    CHECK(d_mu(mu, f + Scalar(3) * g) == d_mu(mu, f) + Scalar(3) * d_mu(mu, g));
    CHECK(d_mu(mu, UElement::scalar(sp4, 7)).is_zero());
  }
}

TEST_CASE("property: D_mu preserves centrality with E_ii") {
  Rng rng(17);
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  const ShiftMatrix mu = ShiftMatrix::generic(gl3);
  const UElement weight_zero = el(gl3, "E[1,2]E[2,1] + E[1,3]E[3,2]E[2,1] + E[2,2]^2");
  for (int i = 0; i < 3; ++i) {
    const UElement eii = UElement::matrix_entry(gl3, i, i);
    REQUIRE(commutator(eii, weight_zero).is_zero());
    CHECK(commutator(eii, d_mu(mu, weight_zero)).is_zero());
  }
}
