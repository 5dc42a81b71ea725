#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chull {

/// Arbitrary-precision integers and rationals. mpq_class keeps values in
/// lowest terms with a positive denominator once canonicalized; every helper
/// here returns canonical values.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws Error(Parse).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exact double conversion is not possible in general; this is the nearest.
inline double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double_exact(double v);

}  // namespace chull
