#include <doctest.h>

#include <cmath>

#include "fpp/errors.hpp"
#include "fpp/gqp.hpp"
#include "fpp/permgroup.hpp"
#include "fpp/report_json.hpp"
#include "fpp/treeoracle.hpp"
#include "test_util.hpp"

using namespace fpp;
using namespace fpp::test;

namespace {

GqpSpec affine3() {
  return validate_gqp(3, perms("(1,2,3)", 3), perms("(1,2,3),(2,3)", 3));
}

}  // namespace

TEST_CASE("validate_gqp accepts the affine example and records the index") {
  const GqpSpec spec = affine3();
  CHECK(spec.index() == 2);
  CHECK(spec.P.size() == 6);
  CHECK(spec.coset_list[0].elements.contains(Perm::identity(3)));
}

TEST_CASE("validate_gqp rejects each malformed input distinctly") {
  CHECK_THROWS_WITH_AS(validate_gqp(4, perms("(1,2)", 4), perms("(1,2),(1,2,3,4)", 4)).index(),
                       doctest::Contains("not normal"), ValidationError);
  CHECK_THROWS_WITH_AS(validate_gqp(3, perms("()", 3), perms("(1,2,3)", 3)).index(),
                       doctest::Contains("nontrivial"), ValidationError);
  CHECK_THROWS_WITH_AS(validate_gqp(2, perms("(1,2)", 2), perms("(1,2)", 2)).index(),
                       doctest::Contains("degree must be >= 3"), ValidationError);
  CHECK_THROWS_WITH_AS(validate_gqp(4, perms("(1,2,3)", 4), perms("(1,2)(3,4),(1,3)(2,4)", 4)).index(),
                       doctest::Contains("not a subgroup"), ValidationError);
}

TEST_CASE("validate_gqp accepts Q = P") {
  const GqpSpec wp = validate_gqp(3, perms("(1,2,3),(2,3)", 3), perms("(1,2,3),(2,3)", 3));
  CHECK(wp.index() == 1);
}

TEST_CASE("fpp_gqp on the spec examples") {
  SUBCASE("affine d=3 gives exactly 1/2") {
    const FppValue v = fpp_gqp(affine3());
    REQUIRE(v.kind == FppKind::ExactRational);
    CHECK(v.exact_value() == make_rational(1, 2));
    CHECK(v.cert.reason == CertReason::DerangementFree);
  }
  SUBCASE("Q = P = Sym(3) reduces to the transitive wreath product") {
    const GqpSpec spec = validate_gqp(3, perms("(1,2,3),(2,3)", 3), perms("(1,2,3),(2,3)", 3));
    CHECK(fpp_gqp(spec).kind == FppKind::ExactZero);
  }
  SUBCASE("Q = P = <(1,2)> inside Sym(3)") {
    const GqpSpec spec = validate_gqp(3, perms("(1,2)", 3), perms("(1,2)", 3));
    CHECK(fpp_gqp(spec).kind == FppKind::ExactOne);
  }
}

TEST_CASE("fpp_gqp propagates one bracket coset through the mean") {
  // Q = center of the dihedral group on 4 points; the identity coset is the
  // only bracket among the four cosets (values: bracket, 1, 0, 0).
  const GqpSpec spec =
      validate_gqp(4, perms("(1,3)(2,4)", 4), perms("(1,2,3,4),(1,3)", 4));
  REQUIRE(spec.index() == 4);
  const FppValue v = fpp_gqp(spec);
  REQUIRE(v.kind == FppKind::Bracket);
  CHECK(v.width() <= pow2(-60));

  const FppValue coset0 = fpp_of_set(spec.coset_list[0].elements);
  REQUIRE(coset0.kind == FppKind::Bracket);
  // mean = (bracket + 1 + 0 + 0) / 4
  CHECK(v.lo == (coset0.lo + 1) / 4);
  CHECK(v.hi == (coset0.hi + 1) / 4);
}

TEST_CASE("level transitivity and the martingale predicate coincide") {
  const GqpSpec affine = affine3();
  CHECK(level_transitive(affine));
  CHECK(martingale(affine));

  const GqpSpec blocked =
      validate_gqp(4, perms("(1,2)(3,4)", 4), perms("(1,2)(3,4),(1,2)", 4));
  CHECK_FALSE(level_transitive(blocked));
  CHECK_FALSE(martingale(blocked));

  const GqpSpec klein = validate_gqp(4, perms("(1,2)(3,4),(1,3)(2,4)", 4),
                                     perms("(1,2),(1,2,3,4)", 4));
  CHECK(level_transitive(klein));
  CHECK(martingale(klein));
}

TEST_CASE("hausdorff_dimension") {
  const HausdorffDim affine = hausdorff_dimension(affine3());
  CHECK(affine.group_order == 3);
  CHECK(affine.full_order == 6);
  CHECK(std::abs(affine.approx - 0.613147) < 1e-5);

  const GqpSpec full = validate_gqp(4, perms("(1,2),(1,2,3,4)", 4), perms("(1,2),(1,2,3,4)", 4));
  const HausdorffDim one = hausdorff_dimension(full);
  CHECK(one.approx == 1.0);

  const GqpSpec klein = validate_gqp(4, perms("(1,2)(3,4),(1,3)(2,4)", 4),
                                     perms("(1,2),(1,2,3,4)", 4));
  const HausdorffDim dim = hausdorff_dimension(klein);
  CHECK(dim.group_order == 4);
  CHECK(dim.full_order == 24);
  CHECK(std::abs(dim.approx - std::log(4.0) / std::log(24.0)) < 1e-12);
}

TEST_CASE("hausdorff dimension is 1 exactly for Q = Sym(d)") {
  for (const char* qgens : {"(1,2,3)", "(1,2)", "(1,2,3),(2,3)"}) {
    const PermSet Q = group_of(qgens, 3);
    const GqpSpec spec = validate_gqp(3, Q, Q);
    const double approx = hausdorff_dimension(spec).approx;
    CHECK(approx > 0);
    CHECK(approx <= 1);
    CHECK((approx == 1.0) == (Q.size() == 6));
  }
}

TEST_CASE("tfg_status follows the Q-structure criteria") {
  CHECK(tfg_status(affine3()).kind == TfgKind::NotTfgCommutator);

  const GqpSpec a5 = validate_gqp(5, perms("(1,2,3),(1,2,3,4,5)", 5),
                                  perms("(1,2,3),(1,2,3,4,5)", 5));
  CHECK(tfg_status(a5).kind == TfgKind::Tfg);

  // A5 x A5 on two blocks of five: perfect, not transitive, no global fixed
  // point. The paper's criteria do not decide this case.
  const PermSet q10 = group_of("(1,2,3),(1,2,3,4,5),(6,7,8),(6,7,8,9,10)", 10);
  REQUIRE(q10.size() == 3600);
  const GqpSpec unknown = validate_gqp(10, q10, q10);
  CHECK(tfg_status(unknown).kind == TfgKind::Unknown);

  // Perfect-but-fixing case: A5 acting on {1..5} inside Sym(6).
  const GqpSpec fixes = validate_gqp(6, perms("(1,2,3),(1,2,3,4,5)", 6),
                                     perms("(1,2,3),(1,2,3,4,5)", 6));
  CHECK(tfg_status(fixes).kind == TfgKind::NotTfgGlobalFixedPoint);
}

TEST_CASE("classify_cosets mirrors the congruence lemma on the affine family") {
  const auto records = classify_cosets(affine3());
  REQUIRE(records.size() == 2);
  // identity coset = W_Q: transitive Q forces FPP 0.
  CHECK(records[0].fpp.kind == FppKind::ExactZero);
  CHECK(records[0].avg_fixed == 1);
  CHECK_FALSE(records[0].unifix);
  // coset a=2: gcd(a-1,3) = 1, every element fixes exactly one point.
  CHECK(records[1].unifix);
  CHECK(records[1].derangement_free);
  CHECK(records[1].fpp.kind == FppKind::ExactOne);
  CHECK(records[1].avg_fixed == 1);
}

TEST_CASE("transitive Q forces Burnside average 1 and 0/1 coset values") {
  const GqpSpec klein = validate_gqp(4, perms("(1,2)(3,4),(1,3)(2,4)", 4),
                                     perms("(1,2),(1,2,3,4)", 4));
  for (const auto& rec : classify_cosets(klein)) {
    CHECK(rec.avg_fixed == 1);
    CHECK((rec.fpp.kind == FppKind::ExactZero || rec.fpp.kind == FppKind::ExactOne));
  }
}

TEST_CASE("affine d=4 coset a=3 averages 1 without being unifix") {
  // Elements 3x+b have 0 or 2 fixed points (gcd(2,4) = 2).
  const GqpSpec spec = validate_gqp(
      4, perms("(1,2,3,4)", 4), perms("(1,2,3,4),(2,4)", 4));
  const auto records = classify_cosets(spec);
  REQUIRE(records.size() == 2);
  CHECK(records[1].avg_fixed == 1);
  CHECK_FALSE(records[1].unifix);
  CHECK(records[1].fpp.kind == FppKind::ExactZero);
}

TEST_CASE("cross-oracle: enumeration fraction equals the mean recurrence value") {
  const GqpSpec spec = affine3();
  const int n = 2;
  const auto enumerated = enumerate_count_gqp(spec.Q, spec.P, n);
  Rational mean(0);
  for (const Coset& A : spec.coset_list) mean += recurrence_p(A.elements, n).back();
  mean /= spec.index();
  mean.canonicalize();
  Rational fraction(enumerated.fixing, enumerated.size);
  fraction.canonicalize();
  CHECK(fraction == mean);
  CHECK(enumerated.size == Integer(2) * sigma_sequence(spec.Q, n).back());
}

TEST_CASE("gqp_report aggregates and serializes") {
  const GqpReport report = gqp_report(affine3());
  CHECK(report.index == 2);
  CHECK(report.level_transitive);
  CHECK(report.martingale == report.level_transitive);
  CHECK(report.cosets.size() == 2);

  const Json record = gqp_report_record(report);
  CHECK(record["fpp"]["kind"] == "exact_rational");
  CHECK(record["fpp"]["bracket_lo"] == "1/2");
  CHECK(record["tfg"] == "not_tfg:commutator");
  // Round trip: parse and re-serialize is the identity.
  CHECK(Json::parse(record.dump()).dump(2) == record.dump(2));
}
