#pragma once

#include <gmpxx.h>

#include <string>

namespace fpp {

using Integer = mpz_class;

/// Exact rational in canonical form (denominator > 0, gcd(num, den) = 1).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "num" or "num/den", canonical form.
std::string rational_to_string(const Rational& q);

/// Parses "num" or "num/den"; throws ValidationError on malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

/// 2^exponent, exponent may be negative.
Rational pow2(int exponent);

/// Largest multiple of 2^-frac_bits that is <= q.
Rational floor_to_dyadic(const Rational& q, int frac_bits);

/// Smallest multiple of 2^-frac_bits that is >= q.
Rational ceil_to_dyadic(const Rational& q, int frac_bits);

/// Decimal rendering with the given significant digits, round half to even,
/// trailing zeros trimmed. Deterministic and locale-independent.
std::string decimal_string(const Rational& q, int significant_digits = 15);

}  // namespace fpp
