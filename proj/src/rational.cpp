#include "fpp/rational.hpp"

#include <stdexcept>

#include "fpp/errors.hpp"

namespace fpp {

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw ValidationError("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw ValidationError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Rational pow2(int exponent) {
  Integer shifted = 1;
  mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(),
               static_cast<unsigned long>(exponent >= 0 ? exponent : -exponent));
  Rational q = exponent >= 0 ? Rational(shifted) : Rational(1, shifted);
  q.canonicalize();
  return q;
}

Rational floor_to_dyadic(const Rational& q, int frac_bits) {
  Integer scaled_num = q.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(),
               static_cast<unsigned long>(frac_bits));
  Integer quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(quotient) * pow2(-frac_bits);
}

Rational ceil_to_dyadic(const Rational& q, int frac_bits) {
  Integer scaled_num = q.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(),
               static_cast<unsigned long>(frac_bits));
  Integer quotient;
  mpz_cdiv_q(quotient.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(quotient) * pow2(-frac_bits);
}

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

std::string decimal_string(const Rational& q, int significant_digits) {
  if (significant_digits < 1) throw ValidationError("significant_digits must be >= 1");
  if (q == 0) return "0";

  const bool negative = q < 0;
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();

  // n10 = number of digits before the decimal point: 10^(n10-1) <= |q| < 10^n10.
  long n10 = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
  while (num >= den * pow10(static_cast<unsigned long>(std::max(0L, n10)))) ++n10;
  while (n10 > 0 ? num < den * pow10(static_cast<unsigned long>(n10 - 1))
                 : num * pow10(static_cast<unsigned long>(1 - n10)) < den)
    --n10;

  // Round |q| * 10^(sig - n10) half to even.
  const long scale = significant_digits - n10;
  Integer scaled_num = num, scaled_den = den;
  if (scale >= 0)
    scaled_num *= pow10(static_cast<unsigned long>(scale));
  else
    scaled_den *= pow10(static_cast<unsigned long>(-scale));
  Integer quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(),
              scaled_den.get_mpz_t());
  const int half_cmp = cmp(remainder * 2, scaled_den);
  if (half_cmp > 0 || (half_cmp == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;
  if (quotient == pow10(static_cast<unsigned long>(significant_digits))) {
    quotient /= 10;
    ++n10;
  }

  std::string digits = quotient.get_str();
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out;
  if (n10 <= 0) {
    out = "0." + std::string(static_cast<size_t>(-n10), '0') + digits;
  } else if (static_cast<size_t>(n10) >= digits.size()) {
    out = digits + std::string(static_cast<size_t>(n10) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<size_t>(n10)) + "." +
          digits.substr(static_cast<size_t>(n10));
  }
  return negative ? "-" + out : out;
}

}  // namespace fpp
