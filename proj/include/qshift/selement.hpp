#pragma once

#include <string>
#include <vector>

#include "qshift/lie_algebra.hpp"
#include "qshift/shift_matrix.hpp"

namespace qshift {

class UElement;

/// An element of the symmetric algebra S(g): commutative polynomials in the
/// canonical generators, with the Lie-Poisson bracket. Monomials are sorted
/// multisets of generators.
class SElement {
 public:
  SElement() = default;
  explicit SElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  SElement(AlgebraPtr alg, Terms terms);

  static SElement scalar(AlgebraPtr alg, const Scalar& c);
  static SElement generator(AlgebraPtr alg, GenId g);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  SElement component(int degree) const;
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;
  /// d/dY_g.
  SElement partial(GenId g) const;

  void add_term(const Monomial& m, const Scalar& c);
  SElement& operator+=(const SElement& other);
  SElement& operator-=(const SElement& other);
  SElement& operator*=(const Scalar& c);

  friend SElement operator+(SElement a, const SElement& b) { return a += b; }
  friend SElement operator-(SElement a, const SElement& b) { return a -= b; }
  friend SElement operator*(const Scalar& c, SElement a) { return a *= c; }
  friend SElement operator*(const SElement& a, const SElement& b);
  friend bool operator==(const SElement& a, const SElement& b);

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

/// {P, Q} = sum_{a,b} dP/dY_a dQ/dY_b [Y_a, Y_b].
SElement poisson_bracket(const SElement& p, const SElement& q);

/// Coefficients P^(0), ..., P^(d) of t^k in P(Y + t mu(Y)); P^(0) = P and
/// P^(d) = P(mu) is a constant.
std::vector<SElement> argument_shift(const SElement& p, const ShiftMatrix& mu);

/// Reads PBW monomials as commutative ones (all degrees).
SElement to_commutative(const UElement& f);
/// Top PBW-degree part of f as an element of S(g).
SElement symbol(const UElement& f);

}  // namespace qshift
