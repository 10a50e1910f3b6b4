#pragma once

#include <string>
#include <string_view>

#include "qshift/lie_algebra.hpp"

namespace qshift {

class UElement;
class SElement;

// Text grammar for elements:
//   element  := term (("+" | "-") term)*
//   term     := coeff "*" monomial | monomial | coeff
//   coeff    := integer ["/" positive-integer]
//   monomial := gen+            (gens may be separated by "*" or blanks)
//   gen      := ("E" | "F") "[" i "," j "]" ["^" exp]
// Indices are 1-based. Output lists monomials in PBW order, highest degree
// first; input may be in any order and is normalized on parsing.

std::string generator_name(const LieAlgebra& alg, GenId g);
std::string format_monomial(const LieAlgebra& alg, const Monomial& m);
std::string format_element(const UElement& f);
std::string format_element(const SElement& f);

/// Parses into U(g); products of generators are PBW-normalized. Entries that
/// are not canonical (e.g. F[2,1] in o_N) are rewritten through the symmetry
/// F_ij = -theta F_{j'i'}.
UElement parse_element(const AlgebraPtr& alg, std::string_view text);

/// Largest index and generator letter appearing in an expression; used to
/// infer the algebra when none is given.
struct ExpressionShape {
  char letter = 0;
  int max_index = 0;
};
ExpressionShape scan_expression(std::string_view text);

}  // namespace qshift
