#include <doctest.h>

#include "goodsg/duality.hpp"
#include "support.hpp"

using namespace goodsg;
using namespace testsupport;

TEST_SUITE("duality") {
  TEST_CASE("symmetric fixtures pair A_i' with A_{N-i+1}") {
    struct Case {
      const char* name;
      Point w;
      int N;
    };
    for (auto c : {Case{"n3_symmetric", {2, 2, 3}, 7}, Case{"fig4_planecurve", {2, 3}, 5},
                   Case{"transversal_cusps", {2, 2}, 4}, Case{"fig3_product", {4, 3}, 7}, Case{"num_4_7", {4}, 4},
                   Case{"num_4_7", {7}, 7}}) {
      CAPTURE(c.name);
      auto S = io::load_fixture(c.name);
      auto E = principal_ideal(S, c.w);
      auto P = apery_levels(S, c.w);
      CHECK(is_symmetric_complement(S, E, P));
      auto r = check_duality(S, E, P);
      CHECK_MESSAGE(r.ok(), r.str());
      REQUIRE(static_cast<int>(r.pairs.size()) == c.N);
      for (int i = 1; i <= c.N; ++i) CHECK(r.pairs[i - 1] == std::pair<int, int>{i, c.N - i + 1});
    }
  }

  TEST_CASE("report text for the N^3 example") {
    auto S = io::load_fixture("n3_symmetric");
    auto r = check_duality(S, principal_ideal(S, {2, 2, 3}), apery_levels(S, {2, 2, 3}));
    auto txt = r.str();
    CHECK(txt.find("PASS  A1' = A7") != std::string::npos);
    CHECK(txt.find("PASS  A4' = A4") != std::string::npos);
  }

  TEST_CASE("non-symmetric semigroup fails the precondition") {
    auto S = io::load_fixture("num_3_5_7");
    auto E = principal_ideal(S, Point{3});
    auto P = apery_levels(S, Point{3});
    CHECK_FALSE(is_symmetric_complement(S, E, P));
    auto r = check_duality(S, E, P);
    CHECK_FALSE(r.precondition);
    CHECK_FALSE(r.ok());
  }

  TEST_CASE("almost symmetric numerical semigroups: Z and W duality") {
    for (auto g : std::vector<std::vector<int>>{{3, 5, 7}, {4, 5, 7}, {5, 6, 7, 8, 9}}) {
      auto S = numerical(g).as_good();
      CAPTURE(numerical(g).str());
      REQUIRE(is_almost_symmetric(S));
      auto r = check_almost_symmetric_duality(S);
      CHECK_MESSAGE(r.ok(), r.str());
    }
    auto bad = numerical({4, 5, 11}).as_good();
    CHECK_FALSE(check_almost_symmetric_duality(bad).ok());
  }

  TEST_CASE("Z and W for <3,5,7>") {
    auto zw = build_Z_W(io::load_fixture("num_3_5_7"));
    // PF = {2, 4}; Z = {0} ∪ PF, W = {0} ∪ Delta(gamma+e) ∪ {a : a - e not PF}.
    CHECK(zw.Z == PointSet{{0}, {2}, {4}});
    CHECK(zw.W.contains(Point{0}));
  }
}
