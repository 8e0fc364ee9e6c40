#include <doctest.h>

#include "goodsg/planecurve.hpp"
#include "goodsg/wellbehaved.hpp"
#include "support.hpp"

using namespace goodsg;
using namespace testsupport;

namespace {

PlaneBranchProfile branch(std::vector<int> g) { return PlaneBranchProfile::from_generators(std::move(g)); }

struct Pair {
  std::vector<int> g1, g2;
  oracle::MonomialBranch b1, b2;  // transversal parametrizations with these semigroups
};

const std::vector<Pair> kPairs = {
    {{2, 3}, {2, 3}, {2, 3}, {3, 2}}, {{2, 3}, {3, 5}, {2, 3}, {5, 3}}, {{2, 3}, {3, 4}, {2, 3}, {4, 3}},
    {{3, 4}, {3, 5}, {3, 4}, {5, 3}}, {{4, 7}, {2, 3}, {4, 7}, {3, 2}}, {{3, 5}, {3, 5}, {3, 5}, {5, 3}},
};

}  // namespace

TEST_SUITE("planecurve") {
  TEST_CASE("omega_{j,k}") {
    const std::vector<int> u{0, 3}, v{0, 5, 10};
    const Point e{2, 3};
    CHECK(omega_jk(u, v, e, 1, 1) == Point{0, 0});
    CHECK(omega_jk(u, v, e, 2, 1) == Point{1, 0});
    CHECK(omega_jk(u, v, e, 1, 2) == Point{0, 2});
    CHECK(omega_jk(u, v, e, 2, 3) == Point{1, 4});
    CHECK(omega_jk({0, 3}, {0, 3}, Point{2, 2}, 2, 2) == Point{1, 1});
    CHECK_THROWS_AS(omega_jk(u, v, e, 3, 1), PreconditionError);
  }

  TEST_CASE("reconstruction of two transversal cusps") {
    auto r = reconstruct_from_blowup(branch({2, 3}), branch({2, 3}));
    CHECK(r.validation.ok());
    CHECK(r.local);
    CHECK(r.symmetric);
    CHECK(r.well_behaved);
    CHECK(r.delta_e_nonempty);
    CHECK(r.S.gamma() == Point{5, 5});
    CHECK(r.e == Point{2, 2});
    REQUIRE(r.shift.level_failures.size() == 4);
    for (int i = 1; i <= 4; ++i) CHECK(r.shift.level_ok(i));
    CHECK(NumericalSemigroup::from_good(projection(r.S, IndexSet::of(2, {1}))) == numerical({2, 3}));
    CHECK(NumericalSemigroup::from_good(projection(r.S, IndexSet::of(2, {2}))) == numerical({2, 3}));
    CHECK(r.S == io::load_fixture("transversal_cusps"));
  }

  TEST_CASE("golden reconstruction file") {
    auto r = reconstruct_from_blowup(branch({2, 3}), branch({2, 3}));
    auto golden = slurp(test_data("golden/reconstruct_2_3_2_3.json"));
    CHECK(io::emit_semigroup(r.S) == golden);
    // The golden file itself is the value semigroup of (t^2,t^3), (u^3,u^2).
    CHECK(io::parse_semigroup(golden) == value_semigroup({2, 3}, {3, 2}, Point{10, 10}));
  }

  TEST_CASE("reconstructions equal the value-semigroup oracle") {
    for (const auto& p : kPairs) {
      auto r = reconstruct_from_blowup(branch(p.g1), branch(p.g2));
      CAPTURE(r.S.conductor().str());
      auto V = value_semigroup(p.b1, p.b2, r.S.conductor() + Point{6, 6});
      CHECK(V == r.S);
      CHECK(r.ok());
    }
  }

  TEST_CASE("plane curve laws on reconstructed semigroups") {
    for (const auto& p : kPairs) {
      auto S = reconstruct_from_blowup(branch(p.g1), branch(p.g2)).S;
      CAPTURE(S.conductor().str());
      for (const auto& rep : {check_absolute_levels(S), ray_coordinates(S), shared_coordinates(S),
                              compare_partitions_planecurve(S), absolutes_in_apery(S)})
        CHECK_MESSAGE(rep.ok(), rep.str());
      auto sh = verify_apery_shift(S);
      CHECK_MESSAGE(sh.ok(), sh.str());
    }
  }

  TEST_CASE("fig4_planecurve in compatibility mode") {
    auto S = io::load_fixture("fig4_planecurve");
    auto Sp = io::load_fixture("fig4_blowup");
    auto sh = verify_apery_shift_compat(S, Sp);
    CHECK_MESSAGE(sh.ok(), sh.str());
    auto ab = check_absolute_levels_compat(S, Sp);
    CHECK_MESSAGE(ab.ok(), ab.str());
    for (const auto& rep : {ray_coordinates(S), shared_coordinates(S), compare_partitions_planecurve(S)})
      CHECK_MESSAGE(rep.ok(), rep.str());
    // The non-local statements do not apply: Delta^S(e) is empty.
    CHECK_FALSE(verify_apery_shift(S).preconditions.empty());
    auto lem = absolutes_in_apery(S);
    REQUIRE_FALSE(lem.failures.empty());
    CHECK(lem.failures.front().rfind("precondition", 0) == 0);
  }

  TEST_CASE("fig4_planecurve absolutes per level") {
    auto S = io::load_fixture("fig4_planecurve");
    auto P = apery_levels(S, Point{2, 3});
    CHECK(classify_level(S, P, 1).absolutes == std::vector<Point>{{0, 0}});
    CHECK(classify_level(S, P, 2).absolutes == std::vector<Point>{{3, 5}});
    CHECK(classify_level(S, P, 3).absolutes == std::vector<Point>{{6, 10}});
    CHECK(classify_level(S, P, 4).absolutes.empty());
  }

  TEST_CASE("reconstruction rejects unsupported input") {
    CHECK_THROWS_AS(reconstruct_from_blowup(branch({2, 3}), branch({2, 3}), false), PreconditionError);
  }
}
