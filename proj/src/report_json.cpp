#include "fpp/report_json.hpp"

#include "fpp/errors.hpp"

namespace fpp {

std::string to_string(FppKind kind) {
  switch (kind) {
    case FppKind::ExactZero: return "exact_zero";
    case FppKind::ExactOne: return "exact_one";
    case FppKind::ExactRational: return "exact_rational";
    case FppKind::Bracket: return "bracket";
  }
  throw InternalError("unknown FppKind");
}

std::string to_string(CertReason reason) {
  switch (reason) {
    case CertReason::DerangementFree: return "derangement_free";
    case CertReason::SubcriticalDerivative: return "subcritical_derivative";
    case CertReason::AllElementsFix: return "all_elements_fix";
    case CertReason::RootBracket: return "root_bracket";
  }
  throw InternalError("unknown CertReason");
}

std::string to_string(TfgKind kind) {
  switch (kind) {
    case TfgKind::Tfg: return "tfg";
    case TfgKind::NotTfgCommutator: return "not_tfg:commutator";
    case TfgKind::NotTfgGlobalFixedPoint: return "not_tfg:global_fixed_point";
    case TfgKind::Unknown: return "unknown";
  }
  throw InternalError("unknown TfgKind");
}

Json fpp_value_record(const FppValue& value) {
  return Json{{"kind", to_string(value.kind)},
              {"decimal", value.decimal()},
              {"bracket_lo", rational_to_string(value.lo)},
              {"bracket_hi", rational_to_string(value.hi)},
              {"certificate_reason", to_string(value.cert.reason)}};
}

Json gqp_report_record(const GqpReport& report) {
  Json cosets = Json::array();
  for (const CosetRecord& rec : report.cosets) {
    cosets.push_back(Json{{"rep", rec.representative.cycle_string()},
                          {"avg_fixed_exact", rational_to_string(rec.avg_fixed)},
                          {"derangement_free", rec.derangement_free},
                          {"unifix", rec.unifix},
                          {"fpp", fpp_value_record(rec.fpp)}});
  }
  return Json{{"degree", report.degree},
              {"index", report.index},
              {"fpp", fpp_value_record(report.fpp)},
              {"level_transitive", report.level_transitive},
              {"martingale", report.martingale},
              {"hausdorff",
               Json{{"log_num", report.hausdorff.group_order.get_str()},
                    {"log_den", report.hausdorff.full_order.get_str()},
                    {"approx", decimal_string(Rational(report.hausdorff.approx), 6)}}},
              {"tfg", to_string(report.tfg.kind)},
              {"tfg_reason", report.tfg.reason},
              {"coset_records", cosets}};
}

Json unifix_report_record(const UnifixReport& report) {
  Json cosets = Json::array();
  for (const UnifixCosetRecord& rec : report.cosets)
    cosets.push_back(Json{{"rep", rec.representative.cycle_string()}, {"unifix", rec.unifix}});
  return Json{{"degree", report.degree}, {"q_name", report.q_name},
              {"q_order", report.q_order}, {"p_order", report.p_order},
              {"index", report.index},    {"found", report.found},
              {"cosets", cosets},         {"note", report.note}};
}

Json oracle_record(int degree, size_t set_size, int n, const Integer& sigma_n,
                   const Integer& f_n, const Rational& p_n, bool matches) {
  return Json{{"d", degree},
              {"set_size", set_size},
              {"n", n},
              {"sigma_n", sigma_n.get_str()},
              {"f_n", f_n.get_str()},
              {"p_n", rational_to_string(p_n)},
              {"matches_recurrence", matches}};
}

Json table1_row(int n, const GlCount& counts) {
  Rational ratio(counts.good, counts.order);
  ratio.canonicalize();
  return Json{{"n", n},
              {"gl_order", counts.order},
              {"good_count", counts.good},
              {"ratio", rational_to_string(ratio)},
              {"decimal", decimal_string(ratio, 15)}};
}

}  // namespace fpp
