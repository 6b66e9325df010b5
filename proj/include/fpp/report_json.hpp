#pragma once

#include <json.hpp>

#include "fpp/charpoly.hpp"
#include "fpp/constructions.hpp"
#include "fpp/gqp.hpp"
#include "fpp/treeoracle.hpp"

namespace fpp {

using Json = nlohmann::json;

std::string to_string(FppKind kind);
std::string to_string(CertReason reason);
std::string to_string(TfgKind kind);

/// {kind, decimal, bracket_lo, bracket_hi, certificate_reason},
/// exact rationals as "num/den" strings.
Json fpp_value_record(const FppValue& value);

Json gqp_report_record(const GqpReport& report);
Json unifix_report_record(const UnifixReport& report);

/// {d, set_size, n, sigma_n, f_n, p_n, matches_recurrence}.
Json oracle_record(int degree, size_t set_size, int n, const Integer& sigma_n,
                   const Integer& f_n, const Rational& p_n, bool matches);

/// {n, gl_order, good_count, ratio, decimal}.
Json table1_row(int n, const GlCount& counts);

}  // namespace fpp
