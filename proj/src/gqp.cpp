#include "fpp/gqp.hpp"

#include <cmath>

#include "fpp/errors.hpp"
#include "fpp/permgroup.hpp"

namespace fpp {

GqpSpec validate_gqp(int degree, const std::vector<Perm>& Qgens, const std::vector<Perm>& Pgens) {
  if (degree < 3)
    throw ValidationError(
        "degree must be >= 3: on the binary tree the only choice is Q = P = Sym(2), "
        "whose fixed-point proportion is 0");
  for (const Perm& g : Qgens)
    if (g.degree() != degree) throw ValidationError("Q generator degree mismatch");
  for (const Perm& g : Pgens)
    if (g.degree() != degree) throw ValidationError("P generator degree mismatch");
  return validate_gqp(degree, generate(Qgens), generate(Pgens));
}

GqpSpec validate_gqp(int degree, const PermSet& Q, const PermSet& P) {
  if (degree < 3)
    throw ValidationError(
        "degree must be >= 3: on the binary tree the only choice is Q = P = Sym(2), "
        "whose fixed-point proportion is 0");
  if (Q.degree() != degree || P.degree() != degree)
    throw ValidationError("group degree mismatch");
  if (!Q.is_group() || !P.is_group()) throw ValidationError("Q and P must be verified groups");
  if (Q.size() == 1) throw ValidationError("Q must be nontrivial");
  for (const Perm& q : Q.elements())
    if (!P.contains(q)) throw ValidationError("Q is not a subgroup of P");
  if (!is_normal(Q, P)) throw ValidationError("Q is not normal in P");

  GqpSpec spec{degree, Q, P, cosets(Q, P)};
  return spec;
}

FppValue fpp_gqp(const GqpSpec& spec, int precision_bits) {
  std::vector<FppValue> parts;
  parts.reserve(spec.coset_list.size());
  int bits = precision_bits;

  for (int attempt = 0;; ++attempt) {
    parts.clear();
    bool any_bracket = false;
    for (const Coset& A : spec.coset_list) {
      parts.push_back(fpp_of_set(A.elements, bits));
      any_bracket = any_bracket || parts.back().kind == FppKind::Bracket;
    }

    Rational sum_lo(0), sum_hi(0);
    long ones = 0;
    for (const FppValue& part : parts) {
      sum_lo += part.lo;
      sum_hi += part.hi;
      if (part.kind == FppKind::ExactOne) ++ones;
    }
    const Rational index(spec.index());
    Rational mean_lo = sum_lo / index;
    Rational mean_hi = sum_hi / index;
    mean_lo.canonicalize();
    mean_hi.canonicalize();

    if (!any_bracket) {
      if (spec.index() == 1) return parts.front();
      Certificate cert{CertReason::DerangementFree, Rational(ones), {}, {}};
      return exact_fpp(mean_lo, std::move(cert), precision_bits);
    }
    if (spec.index() == 1 && bits == precision_bits) return parts.front();

    if (mean_hi - mean_lo <= pow2(-precision_bits)) {
      FppValue v;
      v.kind = FppKind::Bracket;
      v.lo = std::move(mean_lo);
      v.hi = std::move(mean_hi);
      v.precision_bits = precision_bits;
      v.cert = Certificate{CertReason::RootBracket, Rational(ones), {}, {}};
      return v;
    }
    // Mean of at most `index` brackets of width 2^-bits cannot exceed
    // 2^-bits, so one refinement pass always suffices.
    if (attempt > 0) throw InternalError("aggregate bracket failed to tighten");
    bits = precision_bits + 1;
  }
}

bool level_transitive(const GqpSpec& spec) { return is_transitive(spec.Q); }

bool martingale(const GqpSpec& spec) { return is_transitive(spec.Q); }

HausdorffDim hausdorff_dimension(const GqpSpec& spec) {
  Integer full;
  mpz_fac_ui(full.get_mpz_t(), static_cast<unsigned long>(spec.degree));
  const Integer order(static_cast<long>(spec.Q.size()));
  const double approx = std::log(order.get_d()) / std::log(full.get_d());
  return {order, full, approx};
}

TfgStatus tfg_status(const GqpSpec& spec) {
  const PermSet derived = commutator_subgroup(spec.Q);
  if (!(derived == spec.Q))
    return {TfgKind::NotTfgCommutator, "Q has a nontrivial abelianization (Q != Q')"};
  if (const auto fixed = global_fixed_point(spec.Q))
    return {TfgKind::NotTfgGlobalFixedPoint,
            "every element of Q fixes point " + std::to_string(*fixed)};
  if (is_transitive(spec.Q)) return {TfgKind::Tfg, "Q is transitive and perfect"};
  return {TfgKind::Unknown, "Q is perfect, not transitive, with no global fixed point"};
}

std::vector<CosetRecord> classify_cosets(const GqpSpec& spec, int precision_bits) {
  std::vector<CosetRecord> out;
  out.reserve(spec.coset_list.size());
  for (const Coset& A : spec.coset_list) {
    const DerangementProfile D = profile(A.elements);
    CosetRecord rec{A.representative, coset_average_fixed(A), D.counts[0] == 0,
                    D.counts[1] == D.total, fpp_of_set(A.elements, precision_bits)};
    out.push_back(std::move(rec));
  }
  return out;
}

GqpReport gqp_report(const GqpSpec& spec, int precision_bits) {
  GqpReport report;
  report.degree = spec.degree;
  report.index = spec.index();
  report.fpp = fpp_gqp(spec, precision_bits);
  report.level_transitive = level_transitive(spec);
  report.martingale = martingale(spec);
  report.hausdorff = hausdorff_dimension(spec);
  report.tfg = tfg_status(spec);
  report.cosets = classify_cosets(spec, precision_bits);
  return report;
}

}  // namespace fpp
