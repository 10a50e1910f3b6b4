#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshift/random.hpp"
#include "qshift/selement.hpp"
#include "qshift/text.hpp"
#include "qshift/uelement.hpp"

using namespace qshift;

namespace {

UElement el(const AlgebraPtr& alg, const char* s) { return parse_element(alg, s); }

GenId gen_of(const AlgebraPtr& alg, int i, int j) {
  const auto& e = alg->entry(i, j);
  REQUIRE(e.has_value());
  return e->gen;
}

}  // namespace

TEST_CASE("scalars are exact and canonical") {
  CHECK(parse_scalar("6/4") == Scalar(3) / 2);
  CHECK(format_scalar(parse_scalar("-10/4")) == "-5/2");
  CHECK(format_scalar(Scalar(7)) == "7");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("x"), Error);
  CHECK_THROWS_AS(parse_scalar("1/-2"), Error);
}

TEST_CASE("algebra dimensions") {
  CHECK(LieAlgebra::build(Family::gl, 2)->num_generators() == 4);
  CHECK(LieAlgebra::build(Family::symplectic_split, 4)->num_generators() == 10);
  CHECK(LieAlgebra::build(Family::orthogonal_split, 5)->num_generators() == 10);
  CHECK(LieAlgebra::build(Family::orthogonal_split, 4)->num_generators() == 6);
  CHECK(LieAlgebra::build(Family::orthogonal_canonical, 6)->num_generators() == 15);
  CHECK(LieAlgebra::build(Family::symplectic_split, 6)->num_generators() == 21);
  CHECK(LieAlgebra::build(Family::gl, 3) == LieAlgebra::build(Family::gl, 3));
}

TEST_CASE("incompatible N is rejected") {
  CHECK_THROWS_AS(LieAlgebra::build(Family::symplectic_split, 3), Error);
  CHECK_THROWS_AS(LieAlgebra::build(Family::orthogonal_canonical, 5), Error);
  CHECK_THROWS_AS(LieAlgebra::build(Family::gl, 0), Error);
  CHECK_THROWS_AS(LieAlgebra::build(Family::gl, 7), Error);
  CHECK_THROWS_AS(parse_family("e8"), Error);
}

TEST_CASE("family names parse") {
  CHECK(parse_family("gl3") == Family::gl);
  CHECK(parse_family("o5") == Family::orthogonal_split);
  CHECK(parse_family("oN-split") == Family::orthogonal_split);
  CHECK(parse_family("spN") == Family::symplectic_split);
  CHECK(parse_family("o2n-canonical") == Family::orthogonal_canonical);
}

TEST_CASE("generator commutators") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(commutator_generators(gl2, gen_of(gl2, 0, 1), gen_of(gl2, 1, 0)) == el(gl2, "E[1,1] - E[2,2]"));
  CHECK(commutator_generators(gl2, gen_of(gl2, 0, 0), gen_of(gl2, 0, 1)) == el(gl2, "E[1,2]"));
  const auto o5 = LieAlgebra::build(Family::orthogonal_split, 5);
  CHECK(commutator_generators(o5, gen_of(o5, 0, 1), gen_of(o5, 1, 0)) == el(o5, "F[1,1] - F[2,2]"));
}

TEST_CASE("normal form") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(normal_form(gl2, {}) == UElement::one(gl2));
  const GenId e11 = gen_of(gl2, 0, 0), e12 = gen_of(gl2, 0, 1), e21 = gen_of(gl2, 1, 0);
  const std::vector<GenId> sq{e11, e11};
  CHECK(normal_form(gl2, sq).to_string() == "E[1,1]^2");
  const std::vector<GenId> swapped{e21, e12};
  CHECK(normal_form(gl2, swapped) == el(gl2, "E[1,2]E[2,1] - E[1,1] + E[2,2]"));
}

TEST_CASE("arithmetic") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const UElement f = el(gl2, "E[2,1]E[1,2] + 1/2*E[1,1]");
  CHECK(UElement::one(gl2) * f == f);
  CHECK(commutator(f, f).is_zero());
  CHECK(commutator(el(gl2, "E[1,2]"), el(gl2, "E[2,1]")) == el(gl2, "E[1,1] - E[2,2]"));
  CHECK((f - f).is_zero());
  CHECK(power(el(gl2, "E[1,2]"), 3) == el(gl2, "E[1,2]^3"));
  CHECK(el(gl2, "E[1,1]E[2,2]").degree() == 2);
  CHECK(UElement::zero(gl2).degree() == -1);
}

TEST_CASE("mismatched algebras are rejected") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2), gl3 = LieAlgebra::build(Family::gl, 3);
  CHECK_THROWS_AS(el(gl2, "E[1,1]") * el(gl3, "E[1,1]"), Error);
  CHECK_THROWS_AS(el(gl2, "E[1,1]") + el(gl3, "E[1,1]"), Error);
}

TEST_CASE("degree cap") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const UElement x = power(el(gl2, "E[1,2]"), 4);
  CHECK_NOTHROW(x * x);
  CHECK_THROWS_AS(x * x * el(gl2, "E[1,1]"), Error);
}

TEST_CASE("text round trip") {
  const auto o5 = LieAlgebra::build(Family::orthogonal_split, 5);
  const UElement f = el(o5, "3/2*F[2,1]F[1,2] - F[1,3] + 7");
  CHECK(parse_element(o5, f.to_string()) == f);
  // non-canonical entries go through the symmetry F_ij = -F_j'i'
  CHECK(el(o5, "F[5,4]") == el(o5, "-F[2,1]"));
  CHECK(el(o5, "F[1,5]").is_zero());
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(el(gl2, "E[1,2] − E[2,1]") == el(gl2, "E[1,2] - E[2,1]"));
  CHECK(el(gl2, "2*E[1,1]^2*E[2,2]") == el(gl2, "2 E[1,1] E[1,1] E[2,2]"));
}

TEST_CASE("malformed text is rejected") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK_THROWS_AS(el(gl2, "E[1,3]"), Error);
  CHECK_THROWS_AS(el(gl2, "E[1,1"), Error);
  CHECK_THROWS_AS(el(gl2, "F[1,1]"), Error);
  CHECK_THROWS_AS(el(gl2, "E[1,1] +"), Error);
  CHECK_THROWS_AS(el(gl2, "1/0"), Error);
}

TEST_CASE("sp_2 matrix entry F_12 is twice E_12") {
  const auto sp2 = LieAlgebra::build(Family::symplectic_split, 2);
  const auto& amb = sp2->ambient(gen_of(sp2, 0, 1));
  REQUIRE(amb.size() == 1);
  CHECK(amb[0].coeff == 2);
}

TEST_CASE("Poisson bracket") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const SElement e12 = to_commutative(el(gl2, "E[1,2]")), e21 = to_commutative(el(gl2, "E[2,1]"));
  CHECK(poisson_bracket(e12, e12).is_zero());
  CHECK(poisson_bracket(e12, e21) == to_commutative(el(gl2, "E[1,1] - E[2,2]")));
  const SElement h = to_commutative(el(gl2, "E[1,1] - E[2,2]"));
  CHECK(poisson_bracket(e12 * e12, e21) == Scalar(2) * (e12 * h));
}

TEST_CASE("argument shift") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  const ShiftMatrix mu = ShiftMatrix::generic(gl2);
  const SElement y = to_commutative(el(gl2, "E[1,2]"));
  const auto lin = argument_shift(y, mu);
  REQUIRE(lin.size() == 2);
  CHECK(lin[0] == y);
  const auto cst = argument_shift(SElement::scalar(gl2, 5), mu);
  REQUIRE(cst.size() == 1);
  CHECK(cst[0] == SElement::scalar(gl2, 5));
  const SElement tr2 = to_commutative(el(gl2, "E[1,1]^2 + E[2,2]^2 + 2*E[1,2]E[2,1]"));
  const auto sh = argument_shift(tr2, mu);
  REQUIRE(sh.size() == 3);
  CHECK(sh[0] == tr2);
  CHECK(sh[1] == to_commutative(el(gl2, "2*E[1,1] + 4*E[2,2]")));
  CHECK(sh[2] == SElement::scalar(gl2, 5));
}

TEST_CASE("property: Jacobi identity and associativity on random elements") {
  Rng rng(7);
  for (auto fam : {std::pair{Family::gl, 3}, {Family::orthogonal_split, 4}, {Family::symplectic_split, 4}}) {
    const auto alg = LieAlgebra::build(fam.first, fam.second);
    for (int t = 0; t < 20; ++t) {
      const UElement a = random_element(alg, rng, 3, 2), b = random_element(alg, rng, 3, 2),
                     c = random_element(alg, rng, 3, 2);
      CHECK((a * b) * c == a * (b * c));
      const UElement jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                           commutator(c, commutator(a, b));
      CHECK(jac.is_zero());
      CHECK(commutator(a, b + c) == commutator(a, b) + commutator(a, c));
    }
  }
}

TEST_CASE("property: symbol of a product is the product of symbols") {
  Rng rng(11);
  const auto alg = LieAlgebra::build(Family::orthogonal_split, 5);
  for (int t = 0; t < 20; ++t) {
    const UElement a = random_element(alg, rng, 3, 3), b = random_element(alg, rng, 3, 3);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(symbol(a * b) == symbol(a) * symbol(b));
  }
}
