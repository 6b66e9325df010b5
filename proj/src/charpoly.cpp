#include "fpp/charpoly.hpp"

#include <algorithm>

#include "fpp/errors.hpp"

namespace fpp {

DerangementProfile profile(const PermSet& S) {
  if (S.empty()) throw ValidationError("profile needs a nonempty set");
  DerangementProfile p;
  p.degree = S.degree();
  p.counts.assign(static_cast<size_t>(p.degree) + 1, 0);
  for (const Perm& s : S.elements()) ++p.counts[static_cast<size_t>(s.fixed_points())];
  p.total = static_cast<long>(S.size());
  return p;
}

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coefficient(size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return RationalPoly(std::move(out));
}

RationalPoly char_polynomial(const DerangementProfile& p) {
  if (p.total < 1) throw ValidationError("char_polynomial needs total >= 1");
  // 1 - (1-x)^k = sum_{j=1}^{k} C(k,j) (-1)^{j+1} x^j
  std::vector<Rational> coeffs(static_cast<size_t>(p.degree) + 1, Rational(0));
  for (size_t k = 1; k < p.counts.size(); ++k) {
    if (p.counts[k] == 0) continue;
    const Rational weight = make_rational(p.counts[k], p.total);
    for (size_t j = 1; j <= k; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
      Rational term = weight * Rational(binom);
      if (j % 2 == 0) term = -term;
      coeffs[j] += term;
    }
  }
  for (auto& c : coeffs) c.canonicalize();
  return RationalPoly(std::move(coeffs));
}

Rational derivative_at_zero(const DerangementProfile& p) {
  if (p.total < 1) throw ValidationError("derivative_at_zero needs total >= 1");
  Rational sum(0);
  for (size_t k = 1; k < p.counts.size(); ++k)
    sum += Rational(p.counts[k]) * Rational(static_cast<long>(k));
  Rational out = sum / Rational(p.total);
  out.canonicalize();
  return out;
}

Rational FppValue::exact_value() const {
  if (!is_exact()) throw InternalError("exact_value on a bracket");
  return lo;
}

std::string FppValue::decimal(int significant_digits) const {
  return decimal_string(is_exact() ? lo : midpoint(), significant_digits);
}

FppValue exact_fpp(const Rational& value, Certificate cert, int precision_bits) {
  FppValue v;
  if (value == 0)
    v.kind = FppKind::ExactZero;
  else if (value == 1)
    v.kind = FppKind::ExactOne;
  else
    v.kind = FppKind::ExactRational;
  v.lo = v.hi = value;
  v.precision_bits = precision_bits;
  v.cert = std::move(cert);
  return v;
}

namespace {

// g(x) = f_S(x)/x - 1, degree <= d-1; f_S(0) = 0 makes the division exact.
RationalPoly fixed_point_polynomial(const RationalPoly& f) {
  std::vector<Rational> g;
  for (size_t j = 1; j <= static_cast<size_t>(std::max(f.degree(), 1)); ++j)
    g.push_back(f.coefficient(j));
  if (!g.empty()) g[0] -= 1;
  return RationalPoly(std::move(g));
}

// Shrinks a bracket around an exactly-hit root so that the sign certificate
// g(lo) > 0 > g(hi) still holds; the solver never reports the root as exact.
FppValue bracket_around_exact_hit(const RationalPoly& g, const Rational& root,
                                  int precision_bits) {
  Rational delta = pow2(-(precision_bits + 2));
  if (delta > root / 2) delta = root / 2;
  const Rational lo = root - delta;
  Rational hi = root + delta;
  if (hi > 1) hi = Rational(1);
  const Rational g_lo = g.eval(lo);
  const Rational g_hi = g.eval(hi);
  if (!(g_lo > 0 && g_hi < 0))
    throw InternalError("sign certificate failed around exact root hit");
  FppValue v;
  v.kind = FppKind::Bracket;
  v.lo = lo;
  v.hi = hi;
  v.precision_bits = precision_bits;
  v.cert = Certificate{CertReason::RootBracket, root, g_lo, g_hi};
  return v;
}

}  // namespace

FppValue fpp_of_set(const PermSet& S, int precision_bits) {
  if (precision_bits < 1) throw ValidationError("precision must be >= 1");
  const DerangementProfile D = profile(S);

  if (D.counts[0] == 0) {
    Certificate cert{CertReason::AllElementsFix, Rational(0), {}, {}};
    return exact_fpp(Rational(1), std::move(cert), precision_bits);
  }

  const Rational slope0 = derivative_at_zero(D);
  if (slope0 <= 1) {
    Certificate cert{CertReason::SubcriticalDerivative, slope0, {}, {}};
    return exact_fpp(Rational(0), std::move(cert), precision_bits);
  }

  const RationalPoly f = char_polynomial(D);
  const RationalPoly g = fixed_point_polynomial(f);

  // g(1) = f(1) - 1 = -D[0]/#S < 0, so 1 always closes the bracket from above.
  Rational hi(1);
  Rational g_hi = g.eval(hi);
  if (!(g_hi < 0)) throw InternalError("g(1) must be negative when D[0] > 0");

  // 0 is repelling, so halving from 1/2 reaches g > 0.
  Rational lo(1, 2);
  Rational g_lo = g.eval(lo);
  int halvings = 0;
  while (g_lo < 0) {
    if (++halvings > 4 * precision_bits)
      throw InternalError("initial bracket search exhausted its halving budget");
    lo /= 2;
    g_lo = g.eval(lo);
  }
  if (g_lo == 0) return bracket_around_exact_hit(g, lo, precision_bits);

  const Rational target_width = pow2(-precision_bits);
  while (hi - lo > target_width) {
    const Rational mid = (lo + hi) / 2;
    const Rational g_mid = g.eval(mid);
    if (g_mid > 0) {
      lo = mid;
      g_lo = g_mid;
    } else if (g_mid < 0) {
      hi = mid;
      g_hi = g_mid;
    } else {
      return bracket_around_exact_hit(g, mid, precision_bits);
    }
  }

  FppValue v;
  v.kind = FppKind::Bracket;
  v.lo = lo;
  v.hi = hi;
  v.precision_bits = precision_bits;
  v.cert = Certificate{CertReason::RootBracket, {}, g_lo, g_hi};
  return v;
}

Rational coset_average_fixed(const Coset& A) {
  if (A.elements.empty()) throw ValidationError("coset_average_fixed needs a nonempty coset");
  long sum = 0;
  for (const Perm& a : A.elements.elements()) sum += a.fixed_points();
  Rational out(sum, static_cast<long>(A.elements.size()));
  out.canonicalize();
  return out;
}

}  // namespace fpp
