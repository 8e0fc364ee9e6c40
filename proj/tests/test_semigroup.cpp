#include <doctest.h>

#include <set>

#include "goodsg/semigroup.hpp"
#include "support.hpp"

using namespace goodsg;
using namespace testsupport;

namespace {

// Closure of a finite list under capped addition and meet.
PointSet capped_closure(std::vector<Point> gens, const Point& c) {
  std::set<Point> S(gens.begin(), gens.end());
  S.insert(Point(c.dim()));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Point> cur(S.begin(), S.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        Point s = meet(a + b, c);
        Point m = meet(a, b);
        grew |= S.insert(s).second;
        grew |= S.insert(m).second;
      }
  }
  return PointSet(std::vector<Point>(S.begin(), S.end()));
}

GoodSemigroup without(const GoodSemigroup& S, const Point& drop) {
  std::vector<Point> pts;
  for (const auto& p : S.small_elements())
    if (p != drop) pts.push_back(p);
  return GoodSemigroup(S.conductor(), PointSet(std::move(pts)));
}

}  // namespace

TEST_SUITE("semigroup") {
  TEST_CASE("every bundled fixture validates") {
    for (const auto& name : io::fixture_names()) {
      CAPTURE(name);
      auto r = validate(io::load_fixture(name));
      CHECK_MESSAGE(r.ok(), r.str());
    }
  }

  TEST_CASE("plane curve fixtures equal the value-semigroup oracle") {
    struct Case {
      const char* name;
      oracle::MonomialBranch b1, b2;
    };
    // (t^2,t^3),(u^3,u^5): fig4_planecurve; (t^2,t),(u^3,u^2): its blowup;
    // (t^2,t^3),(u^3,u^2): two transversal cusps.
    for (auto c : {Case{"fig4_planecurve", {2, 3}, {3, 5}}, Case{"fig4_blowup", {2, 1}, {3, 2}},
                   Case{"transversal_cusps", {2, 3}, {3, 2}}}) {
      CAPTURE(c.name);
      auto S = io::load_fixture(c.name);
      auto V = value_semigroup(c.b1, c.b2, S.conductor() + Point{4, 4});
      CHECK(V == S);
    }
  }

  TEST_CASE("fig3 fixture is the product of its numerical factors") {
    auto S = io::load_fixture("fig3_product");
    auto m47 = oracle::numerical_members({4, 7}, 60), m35 = oracle::numerical_members({3, 5}, 60);
    for_each_in_box(Point{0, 0}, Point{40, 30}, [&](const Point& p) {
      CHECK(S.contains(p) == (m47[p[0]] && m35[p[1]]));
      return true;
    });
    CHECK(direct_product(numerical({4, 7}).as_good(), numerical({3, 5}).as_good()) == S);
    CHECK_FALSE(S.is_local());
    CHECK(S.conductor() == Point{18, 8});
  }

  TEST_CASE("N^3 fixture is the closure of the printed small elements") {
    std::vector<Point> printed;
    std::istringstream in(slurp(test_data("n3_small_printed.txt")));
    std::string line;
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '#') printed.push_back(io::parse_point(line));
    REQUIRE(printed.size() == 37);
    auto S = io::load_fixture("n3_symmetric");
    CHECK(capped_closure(printed, S.conductor()) == S.small_elements());
    // The printed list alone is not meet-closed.
    PointSet raw(printed);
    CHECK_FALSE(raw.contains(meet(Point{2, 5, 5}, Point{2, 6, 3})));
    CHECK(S.small_elements().size() == 46);
  }

  TEST_CASE("symmetry flags") {
    for (auto n : {"n3_symmetric", "fig3_product", "fig4_planecurve", "transversal_cusps", "num_2_3", "num_3_5",
                   "num_4_7"}) {
      CAPTURE(n);
      CHECK(is_symmetric(io::load_fixture(n)));
    }
    auto S357 = io::load_fixture("num_3_5_7");
    CHECK_FALSE(is_symmetric(S357));
    CHECK(is_almost_symmetric(S357));
    // Local symmetric semigroups are almost symmetric.
    for (auto n : {"n3_symmetric", "fig4_planecurve", "transversal_cusps", "num_2_3"}) {
      CAPTURE(n);
      CHECK(is_almost_symmetric(io::load_fixture(n)));
    }
  }

  TEST_CASE("non-local symmetric product is not almost symmetric") {
    // gamma = (17,7) and Delta((17,7)) contains (17,8), which is not
    // pseudo-Frobenius: (17,8) + (0,3) = (17,11) lies outside S.
    auto S = io::load_fixture("fig3_product");
    CHECK(S.gamma() == Point{17, 7});
    CHECK_FALSE(S.contains(Point{17, 8}));
    CHECK_FALSE(S.contains(Point{17, 11}));
    CHECK(S.contains(Point{0, 3}));
    CHECK_FALSE(is_pseudo_frobenius(S, Point{17, 8}));
    CHECK_FALSE(is_almost_symmetric(S));
  }

  TEST_CASE("multiplicity, locality, absolutes") {
    auto F4 = io::load_fixture("fig4_planecurve");
    CHECK(F4.multiplicity() == Point{2, 3});
    CHECK(F4.is_local());
    CHECK(F4.conductor() == Point{11, 17});
    CHECK(is_absolute(F4, Point{3, 5}));
    // Local blowup: nothing shares a coordinate with e.
    CHECK(is_absolute(F4, Point{2, 3}));
    CHECK_FALSE(is_absolute(F4, Point{6, 9}));
    CHECK_THROWS_AS(is_absolute(F4, Point{1, 1}), PreconditionError);
    auto n3 = io::load_fixture("n3_symmetric");
    CHECK(n3.multiplicity() == Point{2, 2, 3});
    CHECK(n3.conductor() == Point{4, 6, 6});
  }

  TEST_CASE("pseudo-Frobenius numbers agree with brute force") {
    for (auto g : std::vector<std::vector<int>>{{2, 3}, {3, 5}, {4, 7}, {3, 5, 7}, {4, 6, 13}, {5, 7, 9}}) {
      auto N = numerical(g);
      auto pf = pseudo_frobenius(N.as_good(), Point{N.conductor() + 2});
      std::vector<int> got;
      for (const auto& p : pf) got.push_back(p[0]);
      CHECK(got == oracle::pseudo_frobenius(g));
      CHECK(N.pseudo_frobenius() == oracle::pseudo_frobenius(g));
    }
  }

  TEST_CASE("projections of plane curve fixtures") {
    auto F4 = io::load_fixture("fig4_planecurve");
    CHECK(NumericalSemigroup::from_good(projection(F4, IndexSet::of(2, {1}))) == numerical({2, 3}));
    CHECK(NumericalSemigroup::from_good(projection(F4, IndexSet::of(2, {2}))) == numerical({3, 5}));
    auto n3 = io::load_fixture("n3_symmetric");
    auto p12 = projection(n3, IndexSet::of(3, {1, 2}));
    CHECK(p12.dim() == 2);
    CHECK(validate(p12).ok());
    CHECK_THROWS_AS(projection(n3, IndexSet::full(3)), PreconditionError);
  }

  TEST_CASE("validation reports broken inputs") {
    auto F4 = io::load_fixture("fig4_planecurve");
    // (9,16) and (10,16) need a lift (9, >16); the only one is removed.
    auto r = validate(without(F4, Point{9, 17}));
    CHECK_FALSE(r.ok());
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::g2);
    CHECK(r.violations[0].witnesses[0] == Point{9, 16});
    CHECK(r.violations[0].witnesses[1] == Point{10, 16});
    // Dropping an absolute keeps the axioms.
    CHECK(validate(without(F4, Point{3, 5})).ok());
    // Additive closure fails when 2*(2,3) goes missing.
    auto r2 = validate(without(F4, Point{4, 6}));
    CHECK(r2.count(Violation::Kind::additive) > 0);
    // <2,3> stored with conductor 3 instead of 2.
    auto r3 = validate(GoodSemigroup(Point{3}, PointSet{{0}, {2}, {3}}));
    CHECK(r3.count(Violation::Kind::conductor) == 1);
    CHECK_THROWS_AS(GoodSemigroup(Point{3, 3}, PointSet{{0, 0}}), PreconditionError);
  }
}
