#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qshift {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so equality is structural.
using Scalar = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" (q > 0). Throws Error on malformed input.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

Scalar binomial(long n, long k);
Scalar factorial(long n);

}  // namespace qshift
