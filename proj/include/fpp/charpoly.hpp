#pragma once

#include <string>
#include <vector>

#include "fpp/permset.hpp"
#include "fpp/rational.hpp"

namespace fpp {

/// counts[k] = number of elements with exactly k fixed points, k = 0..d.
struct DerangementProfile {
  int degree = 0;
  std::vector<long> counts;
  long total = 0;
};

DerangementProfile profile(const PermSet& S);

/// Dense polynomial with exact rational coefficients, c[0..deg].
class RationalPoly {
 public:
  RationalPoly() = default;  // zero polynomial
  explicit RationalPoly(std::vector<Rational> coefficients);

  /// deg, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(size_t k) const;

  Rational eval(const Rational& x) const;
  RationalPoly derivative() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Monomial-basis expansion of sum_k (D[k]/total) * (1 - (1-x)^k).
RationalPoly char_polynomial(const DerangementProfile& p);

/// f_S'(0) = sum_k k*D[k] / total, exactly.
Rational derivative_at_zero(const DerangementProfile& p);

enum class FppKind { ExactZero, ExactOne, ExactRational, Bracket };

enum class CertReason {
  DerangementFree,         // aggregate: count of FPP-1 cosets among the index
  SubcriticalDerivative,   // exact zero: f_S'(0) <= 1
  AllElementsFix,          // exact one: D[0] = 0
  RootBracket,             // bracket: g(lo) > 0 > g(hi) for g(x) = f_S(x)/x - 1
};

struct Certificate {
  CertReason reason = CertReason::RootBracket;
  Rational data;   // f'(0), D[0], or the one-coset count, per reason
  Rational g_lo;   // RootBracket: exact g values at the endpoints
  Rational g_hi;
};

/// Classification of a fixed-point proportion with its certificate.
/// For exact kinds lo = hi = value; Bracket encloses the unique positive
/// fixed point of f_S with width <= 2^-precision_bits.
struct FppValue {
  FppKind kind = FppKind::ExactZero;
  Rational lo;
  Rational hi;
  int precision_bits = 0;
  Certificate cert;

  bool is_exact() const { return kind != FppKind::Bracket; }
  Rational exact_value() const;
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
  std::string decimal(int significant_digits = 15) const;
};

FppValue exact_fpp(const Rational& value, Certificate cert, int precision_bits);

inline constexpr int kDefaultPrecisionBits = 60;

/// Theorem-driven classifier for FPP(W_S): ExactOne when S is derangement
/// free, ExactZero when f_S'(0) <= 1, otherwise a certified bracket for the
/// unique fixed point in (0,1) found by bisection with exact sign tests.
FppValue fpp_of_set(const PermSet& S, int precision_bits = kDefaultPrecisionBits);

/// (1/#A) sum_{a in A} #fixed(a), exactly.
Rational coset_average_fixed(const Coset& A);

}  // namespace fpp
