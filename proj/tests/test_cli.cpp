#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <string>

#ifndef FPP_CLI_PATH
#error "FPP_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(FPP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli fpp subcommand") {
  const auto bracket = run_cli("fpp -d 4 --group \"(1,2)(3,4)\"");
  CHECK(bracket.exit_code == 0);
  CHECK(contains(bracket.out, "kind: bracket"));
  CHECK(contains(bracket.out, "decimal: 0.45631098730792"));

  const auto zero = run_cli("fpp -d 3 --group \"(1,2,3),(2,3)\"");
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.out, "kind: exact_zero"));

  const auto one = run_cli("fpp -d 3 --set \"(1,2),(1,3),(2,3)\"");
  CHECK(one.exit_code == 0);
  CHECK(contains(one.out, "kind: exact_one"));
}

TEST_CASE("cli exit codes: 2 validation, 3 resource limit") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("fpp -d 4 --group \"(1,5)\"").exit_code == 2);
  CHECK(run_cli("fpp -d 4").exit_code == 2);
  CHECK(run_cli("fpp -d 4 --group \"(1,2)\" --set \"(1,2)\"").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("oracle -d 3 --group \"(1,2,3),(2,3)\" -n 2 --limit 100").exit_code == 3);
  CHECK(run_cli("gqp-report -d 4 --Q \"(1,2)\" --P \"(1,2),(1,2,3,4)\"").exit_code == 2);
}

TEST_CASE("cli construction and psi subcommands") {
  CHECK(run_cli("construction1 -d 9").out == "1/2\n");
  CHECK(run_cli("construction1 -d 8").out == "0\n");
  const auto c2 = run_cli("construction2 -d 8 --realize");
  CHECK(c2.exit_code == 0);
  CHECK(contains(c2.out, "2/7"));
  CHECK(contains(c2.out, "agrees: true"));
  const auto p = run_cli("psi -d 15");
  CHECK(contains(p.out, "psi: 3"));
  CHECK(contains(p.out, "ratio: 3/8"));
}

TEST_CASE("cli table1 reproduces the first rows") {
  const auto table = run_cli("table1 --max-n 3 --format json");
  REQUIRE(table.exit_code == 0);
  const auto rows = nlohmann::json::parse(table.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["gl_order"] == 1);
  CHECK(rows[0]["good_count"] == 0);
  CHECK(rows[1]["gl_order"] == 6);
  CHECK(rows[1]["good_count"] == 2);
  CHECK(rows[2]["gl_order"] == 168);
  CHECK(rows[2]["good_count"] == 48);
}

TEST_CASE("cli oracle agrees with the recurrence and is seeded deterministically") {
  const auto oracle =
      run_cli("oracle -d 3 --group \"(1,2,3)\" -n 2 --format json --mc-trials 2000 --seed 7");
  REQUIRE(oracle.exit_code == 0);
  const auto record = nlohmann::json::parse(oracle.out);
  CHECK(record["sigma_n"] == "81");
  CHECK(record["f_n"] == "19");
  CHECK(record["p_n"] == "19/81");
  CHECK(record["matches_recurrence"] == true);
  CHECK(record.contains("monte_carlo"));

  const auto again =
      run_cli("oracle -d 3 --group \"(1,2,3)\" -n 2 --format json --mc-trials 2000 --seed 7");
  CHECK(again.out == oracle.out);
}

TEST_CASE("cli curve emits the header, endpoints, and annotation row") {
  const auto curve = run_cli("curve -d 3 --group \"(1,2,3)\" --samples 3");
  REQUIRE(curve.exit_code == 0);
  CHECK(contains(curve.out, "x,f,id\n"));
  CHECK(contains(curve.out, "0,0,0\n"));
  CHECK(contains(curve.out, "1,0.333333333333333,1\n"));
  CHECK(contains(curve.out, ",fixed_point\n"));

  const auto klein = run_cli("curve -d 4 --group \"(1,2),(3,4)\" --samples 2");
  CHECK(contains(klein.out, "1,0.75,1\n"));
}

TEST_CASE("cli gqp-report json round-trips and is byte-stable") {
  const std::string args = "gqp-report -d 3 --Q \"(1,2,3)\" --P \"(1,2,3),(2,3)\" --format json";
  const auto first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  const auto parsed = nlohmann::json::parse(first.out);
  CHECK(parsed["index"] == 2);
  CHECK(parsed["fpp"]["kind"] == "exact_rational");
  CHECK(parsed["fpp"]["bracket_lo"] == "1/2");
  CHECK(parsed["level_transitive"] == true);
  CHECK(parsed["martingale"] == true);
  CHECK(parsed["tfg"] == "not_tfg:commutator");
  CHECK(nlohmann::json::parse(first.out).dump(2) + "\n" == first.out);

  const auto second = run_cli(args);
  CHECK(second.out == first.out);
}

TEST_CASE("cli search-unifix built-ins at d = 6 report found = false") {
  const auto search = run_cli("search-unifix -d 6 --format json");
  REQUIRE(search.exit_code == 0);
  const auto reports = nlohmann::json::parse(search.out);
  REQUIRE(reports.size() == 3);
  for (const auto& report : reports) CHECK(report["found"] == false);
}

TEST_CASE("cli search-unifix with explicit Q finds the doubling coset") {
  const auto search = run_cli("search-unifix -d 5 --Q \"(1,2,3,4,5)\" --format json");
  REQUIRE(search.exit_code == 0);
  const auto reports = nlohmann::json::parse(search.out);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0]["found"] == true);
  CHECK(reports[0]["p_order"] == 20);
}
