#pragma once

#include <span>
#include <string>
#include <vector>

#include "qshift/lie_algebra.hpp"

namespace qshift {

/// An element of U(g): a finite rational combination of PBW monomials.
///
/// Zero coefficients are never stored, so two elements are equal iff their
/// term maps are equal. A default-constructed element is the zero of no
/// particular algebra and adopts the algebra of whatever it is combined with.
class UElement {
 public:
  UElement() = default;
  explicit UElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  UElement(AlgebraPtr alg, Terms terms);

  static UElement zero(AlgebraPtr alg) { return UElement(std::move(alg)); }
  static UElement scalar(AlgebraPtr alg, const Scalar& c);
  static UElement one(AlgebraPtr alg) { return scalar(std::move(alg), 1); }
  static UElement generator(AlgebraPtr alg, GenId g);
  /// The matrix entry F_ij (E_ij for gl_N), 0-based; zero when it vanishes.
  static UElement matrix_entry(AlgebraPtr alg, int i, int j);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  /// Coefficient of the unit monomial.
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  int degree() const;  ///< -1 for zero
  /// Homogeneous component of the given PBW degree.
  UElement component(int degree) const;
  /// Terms sorted in the graded order used for printing.
  std::vector<std::pair<Monomial, Scalar>> sorted_terms() const;

  void add_term(const Monomial& m, const Scalar& c);
  UElement& operator+=(const UElement& other);
  UElement& operator-=(const UElement& other);
  UElement& operator*=(const Scalar& c);
  /// this += c * other, without a temporary.
  void add_scaled(const UElement& other, const Scalar& c);

  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator-(UElement a) { return a *= Scalar(-1); }
  friend UElement operator*(const Scalar& c, UElement a) { return a *= c; }
  friend UElement operator*(const UElement& a, const UElement& b);
  friend bool operator==(const UElement& a, const UElement& b);

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

/// Resolves the common algebra of two operands; throws on a mismatch.
AlgebraPtr common_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// PBW normal form of an ordered word of generators.
UElement normal_form(const AlgebraPtr& alg, std::span<const GenId> word);
UElement multiply(const UElement& f, const UElement& g);
UElement commutator(const UElement& f, const UElement& g);
/// Lie bracket of two canonical generators as a degree-1 element.
UElement commutator_generators(const AlgebraPtr& alg, GenId a, GenId b);
/// f^p with f^0 = 1.
UElement power(const UElement& f, int p);

}  // namespace qshift
