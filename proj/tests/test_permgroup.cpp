#include <doctest.h>

#include <random>

#include "fpp/errors.hpp"
#include "fpp/permgroup.hpp"
#include "test_util.hpp"

using namespace fpp;
using namespace fpp::test;

TEST_CASE("parse_perm reads cycle notation") {
  CHECK(parse_perm("(1,2)(3,4)", 4).images() == std::vector<int>{2, 1, 4, 3});
  CHECK(parse_perm("()", 3) == Perm::identity(3));
  CHECK(parse_perm(" ( 1 , 2 ) ", 2).images() == std::vector<int>{2, 1});
  // Non-disjoint cycles compose right-to-left: (1,2)(2,3) sends 2 -> 3.
  CHECK(parse_perm("(1,2)(2,3)", 3).images() == std::vector<int>{2, 3, 1});

  CHECK_THROWS_AS(parse_perm("(1,5)", 4), ValidationError);
  CHECK_THROWS_AS(parse_perm("(0,1)", 4), ValidationError);
  CHECK_THROWS_AS(parse_perm("(1,2", 4), ValidationError);
  CHECK_THROWS_AS(parse_perm("(1)", 4), ValidationError);
  CHECK_THROWS_AS(parse_perm("(1,1)", 4), ValidationError);
  CHECK_THROWS_AS(parse_perm("", 4), ValidationError);
  CHECK_THROWS_AS(parse_perm("()(1,2)", 4), ValidationError);
  CHECK_THROWS_AS(parse_perm("(1,2)", 0), ValidationError);
}

TEST_CASE("cycle_string round-trips through parse_perm") {
  CHECK(Perm::identity(5).cycle_string() == "()");
  CHECK(parse_perm("(1,2)(3,4)", 4).cycle_string() == "(1,2)(3,4)");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Perm p = random_perm(9, rng);
    CHECK(parse_perm(p.cycle_string(), 9) == p);
  }
}

TEST_CASE("fixed_point_count") {
  CHECK(fixed_point_count(Perm::identity(4)) == 4);
  CHECK(fixed_point_count(parse_perm("(1,2)(3,4)", 4)) == 0);
  CHECK(fixed_point_count(parse_perm("(1,2)", 4)) == 2);
}

TEST_CASE("perm algebra basics") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Perm p = random_perm(7, rng);
    CHECK(p.compose(p.inverse()) == Perm::identity(7));
    CHECK(p.compose(Perm::identity(7)) == p);
    CHECK(Perm::identity(7).compose(p) == p);
    int moved = 0;
    for (int x = 1; x <= 7; ++x)
      if (p.apply(x) != x) ++moved;
    CHECK(fixed_point_count(p) == 7 - moved);
  }
}

TEST_CASE("generate closes under the group operations") {
  CHECK(group_of("(1,2,3)", 3).size() == 3);
  CHECK(group_of("(1,2),(3,4)", 4).size() == 4);
  CHECK(group_of("(1,2),(1,2,3,4)", 4).size() == 24);

  const PermSet g = group_of("(1,2),(1,2,3,4)", 4);
  CHECK(g.is_group());
  CHECK(g.with_group_check().is_group());

  CHECK_THROWS_AS(generate(perms("(1,2),(1,2,3,4)", 4), 10), ResourceLimitError);
  CHECK_THROWS_AS(generate({}), ValidationError);
}

TEST_CASE("generate is idempotent") {
  const PermSet g = group_of("(1,2),(3,4,5)", 5);
  CHECK(generate(g.elements()) == g);
}

TEST_CASE("is_transitive by orbit of point 1") {
  CHECK(is_transitive(group_of("(1,2,3)", 3)));
  CHECK_FALSE(is_transitive(group_of("(1,2),(3,4)", 4)));
  CHECK(is_transitive(group_of("(1,2)(3,4),(1,3)(2,4)", 4)));
  // Works on bare sets as well: the orbit closure generates as it walks.
  CHECK(is_transitive(set_of("(1,2,3,4)", 4)));
}

TEST_CASE("transitive groups move any point to any other") {
  const PermSet g = group_of("(1,2)(3,4),(1,3)(2,4)", 4);
  REQUIRE(is_transitive(g));
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y) {
      bool witnessed = false;
      for (const Perm& q : g.elements()) witnessed = witnessed || q.apply(x) == y;
      CHECK(witnessed);
    }
}

TEST_CASE("is_normal") {
  const PermSet s3 = sym(3);
  CHECK(is_normal(group_of("(1,2,3)", 3), s3));
  CHECK_FALSE(is_normal(group_of("(1,2)", 3), s3));
  const PermSet q = group_of("(1,2)", 3);
  CHECK(is_normal(q, q));
  CHECK_THROWS_AS(is_normal(group_of("(1,2)", 4), group_of("(1,2,3)", 4)), ValidationError);
}

TEST_CASE("cosets partition P with the identity coset first") {
  const PermSet c3 = group_of("(1,2,3)", 3);
  const auto two = cosets(c3, sym(3));
  REQUIRE(two.size() == 2);
  CHECK(two[0].elements.contains(Perm::identity(3)));
  CHECK(two[0].representative == Perm::identity(3));
  CHECK(two[0].elements.size() == 3);
  CHECK(two[1].elements.size() == 3);

  const auto self = cosets(c3, c3);
  REQUIRE(self.size() == 1);
  CHECK(self[0].elements == c3);

  const PermSet klein = group_of("(1,2)(3,4),(1,3)(2,4)", 4);
  const auto six = cosets(klein, sym(4));
  REQUIRE(six.size() == 6);
  size_t covered = 0;
  for (size_t i = 0; i < six.size(); ++i) {
    CHECK(six[i].elements.size() == 4);
    covered += six[i].elements.size();
    for (size_t j = i + 1; j < six.size(); ++j)
      for (const Perm& e : six[i].elements.elements()) CHECK_FALSE(six[j].elements.contains(e));
  }
  CHECK(covered == 24);

  CHECK_THROWS_AS(cosets(group_of("(1,2)", 3), group_of("(1,2,3)", 3)), ValidationError);
}

TEST_CASE("commutator_subgroup") {
  CHECK(commutator_subgroup(group_of("(1,2),(3,4)", 4)).size() == 1);
  CHECK(commutator_subgroup(sym(3)) == group_of("(1,2,3)", 3));
  const PermSet a5 = group_of("(1,2,3),(1,2,3,4,5)", 5);
  REQUIRE(a5.size() == 60);
  CHECK(commutator_subgroup(a5) == a5);
}

TEST_CASE("normalizer_in_sym") {
  CHECK(normalizer_in_sym(group_of("(1,2,3)", 3)) == sym(3));
  CHECK(normalizer_in_sym(sym(3)) == sym(3));
  CHECK(normalizer_in_sym(group_of("(1,2,3,4,5)", 5)).size() == 20);
  CHECK_THROWS_AS(normalizer_in_sym(group_of("(1,2,3,4,5,6,7,8,9)", 9)), ResourceLimitError);
}

TEST_CASE("global_fixed_point") {
  CHECK(global_fixed_point(group_of("(1,2)", 3)) == 3);
  CHECK_FALSE(global_fixed_point(group_of("(1,2,3)", 3)).has_value());
  CHECK(global_fixed_point(group_of("(1,2),(3,4)", 5)) == 5);
}

TEST_CASE("conjugate_set relabels points") {
  CHECK(conjugate_set(group_of("(1,2)", 3), parse_perm("(2,3)", 3)) == group_of("(1,3)", 3));
  const PermSet s = group_of("(1,2),(3,4)", 4);
  CHECK(conjugate_set(s, Perm::identity(4)) == s);
  CHECK(conjugate_set(group_of("(1,2)(3,4)", 4), parse_perm("(1,3)", 4)) ==
        group_of("(2,3)(1,4)", 4));
}

TEST_CASE("generate handles degrees beyond the packed-key width") {
  // Degree 17 falls back to the image-table hash.
  std::string cycle = "(1";
  for (int i = 2; i <= 17; ++i) cycle += "," + std::to_string(i);
  cycle += ")";
  const PermSet c17 = group_of(cycle, 17);
  CHECK(c17.size() == 17);
  CHECK(is_transitive(c17));
  CHECK(c17.contains(parse_perm(cycle, 17).inverse()));
}

TEST_CASE("PermSet rejects mixed degrees") {
  CHECK_THROWS_AS(PermSet(4, {Perm::identity(4), Perm::identity(3)}), ValidationError);
  CHECK_THROWS_AS(PermSet(3, {Perm::identity(4)}), ValidationError);
}

TEST_CASE("regular_representation acts freely and transitively") {
  const PermSet s3 = sym(3);
  const auto gens = regular_representation(s3);
  const PermSet reg = generate(gens);
  CHECK(reg.degree() == 6);
  CHECK(reg.size() == 6);
  CHECK(is_transitive(reg));
  for (const Perm& p : reg.elements())
    if (!p.is_identity()) CHECK(fixed_point_count(p) == 0);
}
