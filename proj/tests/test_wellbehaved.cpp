#include <doctest.h>

#include "goodsg/wellbehaved.hpp"
#include "support.hpp"

using namespace goodsg;
using namespace testsupport;

namespace {

struct Fixture {
  GoodSemigroup S;
  GoodIdeal E;
  LevelPartition P;
  explicit Fixture(const char* name, std::optional<Point> w = std::nullopt)
      : S(io::load_fixture(name)),
        E(principal_ideal(S, w.value_or(S.multiplicity()))),
        P(apery_levels(S, w.value_or(S.multiplicity()))) {}
};

}  // namespace

TEST_SUITE("wellbehaved") {
  TEST_CASE("plane curve Apery sets are well-behaved, products are not") {
    for (auto n : {"fig4_planecurve", "transversal_cusps", "fig4_blowup"}) {
      CAPTURE(n);
      Fixture f(n);
      CHECK(is_well_behaved(f.S, f.E, f.P));
      CHECK(well_behaved_violations(f.S, f.E, f.P, Exec::serial).empty());
    }
    Fixture f3("fig3_product");
    auto v = well_behaved_violations(f3.S, f3.E, f3.P, Exec::serial);
    CHECK_FALSE(v.empty());
    CHECK(v == well_behaved_violations(f3.S, f3.E, f3.P, Exec::parallel));
    CHECK(v.front() == Point{0, 0});  // (4,0) and (0,3) lie in A
  }

  TEST_CASE("the three d = 2 conditions agree") {
    for (auto n : {"fig4_planecurve", "transversal_cusps", "fig3_product", "fig4_blowup"}) {
      CAPTURE(n);
      Fixture f(n);
      auto q = d2_equivalences(f.S, f.E, f.P);
      CHECK(q.agree());
      CHECK(q.well_behaved == is_well_behaved(f.S, f.E, f.P));
    }
    Fixture f3("fig3_product", Point{7, 5});
    CHECK(d2_conditions(f3.S, f3.E, f3.P).agree());
  }

  TEST_CASE("Delta lines inside A sit in one level") {
    Fixture f("fig4_planecurve");
    CHECK(single_line_level(f.S, f.E, f.P, Point{3, -1}, IndexSet::of(2, {1})) == 2);
    CHECK(single_line_level(f.S, f.E, f.P, Point{0, -1}, IndexSet::of(2, {1})) == 1);
    CHECK(single_line_level(f.S, f.E, f.P, Point{-1, 10}, IndexSet::of(2, {2})) == 3);
    CHECK_THROWS_AS(single_line_level(f.S, f.E, f.P, Point{1, -1}, IndexSet::of(2, {1})), PreconditionError);
    CHECK_THROWS_AS(single_line_level(f.S, f.E, f.P, Point{2, -1}, IndexSet::of(2, {1})), PreconditionError);
  }

  TEST_CASE("projection bounds and gamma lines") {
    for (auto n : {"fig4_planecurve", "transversal_cusps"}) {
      CAPTURE(n);
      Fixture f(n);
      auto r = projection_level_bound(f.S, f.S.multiplicity(), f.P);
      CHECK_MESSAGE(r.ok(), r.str());
      for (int k : {1, 2}) {
        auto g = gamma_line_levels(f.S, f.S.multiplicity(), f.P, IndexSet::of(2, {k}));
        CHECK_MESSAGE(g.ok(), g.str());
      }
    }
    Fixture f3("fig3_product");
    CHECK_THROWS_AS(projection_level_bound(f3.S, Point{4, 3}, f3.P), PreconditionError);
  }

  TEST_CASE("level closed by theta0 with three absolutes") {
    // theta0 = (2,16) closes the vertical ray; absolutes (6,13), (12,8), (17,5);
    // the level is bounded in the first coordinate.
    std::vector<Point> elems{{2, 14}, {2, 15}, {2, 17}, {2, 18}, {2, 19}, {3, 13}, {5, 13}, {6, 13}, {6, 10},
                             {6, 11}, {7, 8},  {9, 8},  {12, 8}, {12, 6}, {12, 7}, {14, 5}, {16, 5}, {17, 5},
                             {17, 3}};
    auto ls = classify_points(elems, Point{2, 16}, {{6, 13}, {12, 8}, {17, 5}}, std::nullopt);
    REQUIRE(ls.unclassified.empty());
    CHECK(ls.no_shared_coordinate.empty());
    CHECK(ls.printed_reading_only.empty());
    auto tag_of = [&](const Point& p) {
      for (std::size_t k = 0; k < ls.elements.size(); ++k)
        if (ls.elements[k] == p) return ls.tags[k];
      FAIL("missing element");
      return LevelTag{};
    };
    auto is = [&](const Point& p, int clause, int k) {
      auto t = tag_of(p);
      CAPTURE(p.str());
      CHECK(t.clause == clause);
      if (clause == 2 || clause == 3) CHECK(t.k == k);
    };
    for (int y : {17, 18, 19}) is(Point{2, y}, 1, -1);
    for (int y : {14, 15}) is(Point{2, y}, 2, 0);
    for (int x : {3, 5}) is(Point{x, 13}, 3, 1);
    for (int y : {10, 11, 13}) is(Point{6, y}, 2, 1);
    for (int x : {7, 9}) is(Point{x, 8}, 3, 2);
    for (int y : {6, 7, 8}) is(Point{12, y}, 2, 2);
    for (int x : {14, 16, 17}) is(Point{x, 5}, 3, 3);
    is(Point{17, 3}, 4, -1);
  }

  TEST_CASE("classification on computed levels") {
    for (auto n : {"fig4_planecurve", "transversal_cusps"}) {
      Fixture f(n);
      for (int i = 1; i <= f.P.size(); ++i) {
        CAPTURE(n);
        CAPTURE(i);
        LevelStructure ls;
        REQUIRE_NOTHROW(ls = classify_level(f.S, f.P, i));
        CHECK(ls.no_shared_coordinate.empty());
      }
    }
    Fixture f4("fig4_planecurve");
    auto l3 = classify_level(f4.S, f4.P, 3);
    CHECK(l3.absolutes == std::vector<Point>{{6, 10}});
    CHECK(l3.theta_last == Point{6, 9});
    CHECK_FALSE(l3.theta0.has_value());
    auto l5 = classify_level(f4.S, f4.P, 5);
    CHECK(l5.absolutes.empty());
    CHECK(l5.theta0 == Point{12, 19});
    CHECK(l5.theta_last == Point{12, 19});
  }

  TEST_CASE("unclassifiable input is reported") {
    auto ls = classify_points({{1, 1}, {4, 4}}, std::nullopt, {{1, 1}}, std::nullopt);
    CHECK(ls.unclassified == std::vector<Point>{{4, 4}});
    CHECK(ls.no_shared_coordinate == std::vector<Point>{{4, 4}});
  }
}
