// Command-line front door: exact fixed-point-proportion computations for
// iterated wreath products over subsets of Sym(d) and for the coset
// constrained tree groups, with brute-force oracles and CSV curve data.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fpp/charpoly.hpp"
#include "fpp/constructions.hpp"
#include "fpp/errors.hpp"
#include "fpp/gqp.hpp"
#include "fpp/permgroup.hpp"
#include "fpp/report_json.hpp"
#include "fpp/treeoracle.hpp"

namespace {

using namespace fpp;

constexpr int kExitValidation = 2;
constexpr int kExitResourceLimit = 3;

// Splits an element list on commas at parenthesis depth zero, so
// "(1,2)(3,4),(1,3)" yields two tokens.
std::vector<std::string> split_elements(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::vector<Perm> parse_perm_list(const std::string& text, int degree) {
  std::vector<Perm> out;
  for (const std::string& token : split_elements(text)) out.push_back(parse_perm(token, degree));
  return out;
}

// --group closes the generators; --set takes the elements as written.
PermSet parse_input_set(int degree, const std::string& group_gens, const std::string& set_elems) {
  if (group_gens.empty() == set_elems.empty())
    throw ValidationError("exactly one of --group and --set is required");
  if (!group_gens.empty()) return generate(parse_perm_list(group_gens, degree));
  return PermSet::from_elements(degree, parse_perm_list(set_elems, degree));
}

std::string poly_to_string(const RationalPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < f.coefficients().size(); ++k) {
    const Rational& c = f.coefficients()[k];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    first = false;
    const Rational a = abs(c);
    if (k == 0) {
      out << rational_to_string(a);
    } else {
      if (a != 1) out << rational_to_string(a) << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

void pad_to(std::ostringstream& os, size_t column) {
  while (os.str().size() < column) os << ' ';
}

void print_fpp_text(std::ostream& os, const FppValue& v) {
  os << "kind: " << to_string(v.kind) << "\n";
  os << "decimal: " << v.decimal() << "\n";
  os << "bracket_lo: " << rational_to_string(v.lo) << "\n";
  os << "bracket_hi: " << rational_to_string(v.hi) << "\n";
  os << "certificate: " << to_string(v.cert.reason) << "\n";
}

struct SharedFlags {
  int degree = 0;
  std::string group;
  std::string set;
  std::string format = "text";
  int precision = kDefaultPrecisionBits;
};

void add_input_flags(CLI::App* cmd, SharedFlags& flags) {
  cmd->add_option("-d,--degree", flags.degree, "degree of the symmetric group")->required();
  cmd->add_option("--group", flags.group, "generators to close into a group");
  cmd->add_option("--set", flags.set, "explicit element list, taken as written");
}

int run(int argc, char** argv) {
  CLI::App app{"exact fixed-point proportions of iterated wreath products"};
  app.require_subcommand(1);

  // fpp
  SharedFlags fpp_flags;
  auto* cmd_fpp = app.add_subcommand("fpp", "classify FPP(W_S) with a certificate");
  add_input_flags(cmd_fpp, fpp_flags);
  cmd_fpp->add_option("--precision", fpp_flags.precision, "bracket precision in bits");
  cmd_fpp->add_option("--format", fpp_flags.format)->check(CLI::IsMember({"text", "json"}));

  // curve
  SharedFlags curve_flags;
  long samples = 33;
  auto* cmd_curve = app.add_subcommand("curve", "CSV samples of f_S over [0,1]");
  add_input_flags(cmd_curve, curve_flags);
  cmd_curve->add_option("--samples", samples, "number of sample points (>= 2)");
  cmd_curve->add_option("--precision", curve_flags.precision);
  curve_flags.format = "csv";
  cmd_curve->add_option("--format", curve_flags.format)->check(CLI::IsMember({"csv"}));

  // oracle
  SharedFlags oracle_flags;
  int oracle_n = 2;
  std::string limit_text = kDefaultEnumerationLimit.get_str();
  long mc_trials = 0;
  std::uint64_t seed = 0;
  auto* cmd_oracle =
      app.add_subcommand("oracle", "brute-force enumeration against the recurrence");
  add_input_flags(cmd_oracle, oracle_flags);
  cmd_oracle->add_option("-n,--depth", oracle_n, "tree depth");
  cmd_oracle->add_option("--limit", limit_text, "portrait enumeration limit");
  cmd_oracle->add_option("--mc-trials", mc_trials, "also run Monte-Carlo with this many trials");
  cmd_oracle->add_option("--seed", seed, "Monte-Carlo seed");
  cmd_oracle->add_option("--format", oracle_flags.format)->check(CLI::IsMember({"text", "json"}));

  // gqp-report
  int gqp_degree = 0;
  std::string gqp_Q, gqp_P, gqp_format = "text";
  int gqp_precision = kDefaultPrecisionBits;
  auto* cmd_gqp = app.add_subcommand("gqp-report", "full report for the coset tree group");
  cmd_gqp->add_option("-d,--degree", gqp_degree)->required();
  cmd_gqp->add_option("--Q", gqp_Q, "generators of Q")->required();
  cmd_gqp->add_option("--P", gqp_P, "generators of P")->required();
  cmd_gqp->add_option("--precision", gqp_precision);
  cmd_gqp->add_option("--format", gqp_format)->check(CLI::IsMember({"text", "json"}));

  // table1
  int max_n = 4;
  std::string table_format = "text";
  auto* cmd_table = app.add_subcommand("table1", "GL_n(F_2) counts, n = 1..max");
  cmd_table->add_option("--max-n", max_n)->check(CLI::Range(1, 5));
  cmd_table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json"}));

  // construction1 / construction2 / psi
  int c1_degree = 0;
  auto* cmd_c1 = app.add_subcommand("construction1", "FPP of the affine family, exact");
  cmd_c1->add_option("-d,--degree", c1_degree)->required();

  int c2_degree = 0;
  bool c2_realize = false;
  auto* cmd_c2 = app.add_subcommand("construction2", "FPP of the C_2^n x C_r family, exact");
  cmd_c2->add_option("-d,--degree", c2_degree)->required();
  cmd_c2->add_flag("--realize", c2_realize,
                   "realize the groups on d points and cross-check via the coset pipeline");

  long psi_d = 0;
  auto* cmd_psi = app.add_subcommand("psi", "psi(d), Phi(d) and their exact ratio");
  cmd_psi->add_option("-d,--degree", psi_d)->required();

  // search-unifix
  int su_degree = 0;
  std::string su_Q, su_P, su_format = "text";
  auto* cmd_su = app.add_subcommand(
      "search-unifix", "scan cosets of P/Q for one whose elements fix exactly one point");
  cmd_su->add_option("-d,--degree", su_degree)->required();
  cmd_su->add_option("--Q", su_Q, "generators of a transitive Q (default: built-in candidates)");
  cmd_su->add_option("--P", su_P, "generators of P (default: normalizer of Q)");
  cmd_su->add_option("--format", su_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (cmd_fpp->parsed()) {
    const PermSet S = parse_input_set(fpp_flags.degree, fpp_flags.group, fpp_flags.set);
    const FppValue v = fpp_of_set(S, fpp_flags.precision);
    const DerangementProfile D = profile(S);
    const RationalPoly f = char_polynomial(D);
    if (fpp_flags.format == "json") {
      Json record = fpp_value_record(v);
      record["d"] = fpp_flags.degree;
      record["set_size"] = S.size();
      record["profile"] = D.counts;
      Json coeffs = Json::array();
      for (const Rational& c : f.coefficients()) coeffs.push_back(rational_to_string(c));
      record["f_coefficients"] = coeffs;
      std::cout << record.dump(2) << "\n";
    } else {
      print_fpp_text(std::cout, v);
      std::cout << "profile:";
      for (long c : D.counts) std::cout << " " << c;
      std::cout << "\nf_S(x) = " << poly_to_string(f) << "\n";
    }
    return 0;
  }

  if (cmd_curve->parsed()) {
    if (samples < 2) throw ValidationError("--samples must be >= 2");
    const PermSet S = parse_input_set(curve_flags.degree, curve_flags.group, curve_flags.set);
    const RationalPoly f = char_polynomial(profile(S));
    const FppValue v = fpp_of_set(S, curve_flags.precision);
    std::cout << "x,f,id\n";
    for (long i = 0; i < samples; ++i) {
      Rational x(i, samples - 1);
      x.canonicalize();
      std::cout << decimal_string(x) << "," << decimal_string(f.eval(x)) << ","
                << decimal_string(x) << "\n";
    }
    std::cout << v.decimal() << "," << v.decimal() << ",fixed_point\n";
    return 0;
  }

  if (cmd_oracle->parsed()) {
    const PermSet S = parse_input_set(oracle_flags.degree, oracle_flags.group, oracle_flags.set);
    const Integer limit(limit_text);
    const std::vector<Rational> p = recurrence_p(S, oracle_n);
    const EnumerationResult enumerated = enumerate_count(S, oracle_n, limit);
    const bool matches = enumerated.proportion() == p.back();
    Json record = oracle_record(oracle_flags.degree, S.size(), oracle_n, enumerated.sigma,
                                enumerated.fixing, p.back(), matches);
    std::optional<MonteCarloResult> mc;
    if (mc_trials > 0) {
      mc = monte_carlo_p(S, oracle_n, mc_trials, seed);
      record["monte_carlo"] = Json{{"estimate", decimal_string(Rational(mc->estimate), 10)},
                                   {"halfwidth", decimal_string(Rational(mc->halfwidth), 10)},
                                   {"trials", mc->trials},
                                   {"seed", seed}};
    }
    if (oracle_flags.format == "json") {
      std::cout << record.dump(2) << "\n";
    } else {
      std::cout << "d: " << oracle_flags.degree << "\nset_size: " << S.size()
                << "\nn: " << oracle_n << "\nsigma_n: " << enumerated.sigma.get_str()
                << "\nf_n: " << enumerated.fixing.get_str()
                << "\np_n: " << rational_to_string(p.back())
                << "\nmatches_recurrence: " << (matches ? "true" : "false") << "\n";
      if (mc)
        std::cout << "monte_carlo_estimate: " << decimal_string(Rational(mc->estimate), 10)
                  << "\nmonte_carlo_halfwidth: " << decimal_string(Rational(mc->halfwidth), 10)
                  << "\n";
    }
    return 0;
  }

  if (cmd_gqp->parsed()) {
    const GqpSpec spec = validate_gqp(gqp_degree, parse_perm_list(gqp_Q, gqp_degree),
                                      parse_perm_list(gqp_P, gqp_degree));
    const GqpReport report = gqp_report(spec, gqp_precision);
    if (gqp_format == "json") {
      std::cout << gqp_report_record(report).dump(2) << "\n";
    } else {
      std::cout << "degree: " << report.degree << "\nindex: " << report.index << "\n";
      print_fpp_text(std::cout, report.fpp);
      std::cout << "level_transitive: " << (report.level_transitive ? "true" : "false")
                << "\nmartingale: " << (report.martingale ? "true" : "false")
                << "\nhausdorff: log(" << report.hausdorff.group_order.get_str() << ")/log("
                << report.hausdorff.full_order.get_str() << ") = "
                << decimal_string(Rational(report.hausdorff.approx), 6)
                << "\ntfg: " << to_string(report.tfg.kind) << " (" << report.tfg.reason << ")\n"
                << "cosets:\n";
      for (const CosetRecord& rec : report.cosets)
        std::cout << "  " << rec.representative.cycle_string()
                  << " avg_fixed=" << rational_to_string(rec.avg_fixed)
                  << " derangement_free=" << (rec.derangement_free ? "true" : "false")
                  << " unifix=" << (rec.unifix ? "true" : "false")
                  << " fpp=" << to_string(rec.fpp.kind) << " " << rec.fpp.decimal() << "\n";
    }
    return 0;
  }

  if (cmd_table->parsed()) {
    Json rows = Json::array();
    for (int n = 1; n <= max_n; ++n) rows.push_back(table1_row(n, gl_counts(n)));
    if (table_format == "json") {
      std::cout << rows.dump(2) << "\n";
    } else {
      std::cout << "n    gl_order    good_count    ratio      decimal\n";
      for (const auto& row : rows) {
        std::ostringstream line;
        line << row["n"].get<int>();
        pad_to(line, 5);
        line << row["gl_order"].get<long>();
        pad_to(line, 17);
        line << row["good_count"].get<long>();
        pad_to(line, 31);
        line << row["ratio"].get<std::string>();
        pad_to(line, 42);
        line << row["decimal"].get<std::string>();
        std::cout << line.str() << "\n";
      }
    }
    return 0;
  }

  if (cmd_c1->parsed()) {
    std::cout << rational_to_string(fpp_construction1(c1_degree)) << "\n";
    return 0;
  }

  if (cmd_c2->parsed()) {
    const Rational closed_form = fpp_construction2(c2_degree);
    std::cout << rational_to_string(closed_form) << "\n";
    if (c2_realize) {
      const GroupPair pair = realize_construction2(c2_degree);
      const GqpSpec spec = validate_gqp(c2_degree, pair.Qgens, pair.Pgens);
      const FppValue v = fpp_gqp(spec);
      const bool agrees = v.is_exact() && v.exact_value() == closed_form;
      std::cout << "realized |Q|=" << spec.Q.size() << " |P|=" << spec.P.size()
                << " index=" << spec.index() << "\npipeline_fpp: "
                << (v.is_exact() ? rational_to_string(v.exact_value()) : v.decimal())
                << "\nagrees: " << (agrees ? "true" : "false") << "\n";
      if (!agrees) return 1;
    }
    return 0;
  }

  if (cmd_psi->parsed()) {
    const long psi_value = psi(psi_d);
    const long phi_value = phi(psi_d);
    Rational ratio(psi_value, phi_value);
    ratio.canonicalize();
    std::cout << "psi: " << psi_value << "\nphi: " << phi_value
              << "\nratio: " << rational_to_string(ratio) << "\n";
    return 0;
  }

  if (cmd_su->parsed()) {
    std::vector<UnifixReport> reports;
    if (!su_Q.empty()) {
      std::optional<std::vector<Perm>> P;
      if (!su_P.empty()) P = parse_perm_list(su_P, su_degree);
      reports.push_back(search_unifix(su_degree, parse_perm_list(su_Q, su_degree), P));
    } else {
      if (!su_P.empty()) throw ValidationError("--P needs an explicit --Q");
      for (const auto& [name, gens] : builtin_unifix_candidates(su_degree))
        reports.push_back(search_unifix(su_degree, gens, std::nullopt, name));
    }
    if (su_format == "json") {
      Json all = Json::array();
      for (const auto& report : reports) all.push_back(unifix_report_record(report));
      std::cout << all.dump(2) << "\n";
    } else {
      for (const auto& report : reports) {
        std::cout << "Q=" << report.q_name << " |Q|=" << report.q_order
                  << " |P|=" << report.p_order << " index=" << report.index
                  << " found=" << (report.found ? "true" : "false") << " (" << report.note
                  << ")\n";
        for (const auto& rec : report.cosets)
          std::cout << "  " << rec.representative.cycle_string()
                    << " unifix=" << (rec.unifix ? "true" : "false") << "\n";
      }
      std::cout << "note: built-in candidates are not a transitive-group census\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fpp::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const fpp::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
