#include <doctest.h>

#include "goodsg/planecurve.hpp"
#include "support.hpp"

using namespace goodsg;
using namespace testsupport;

TEST_SUITE("numerical") {
  TEST_CASE("minimal generators and membership") {
    auto N = numerical({4, 6, 8, 13});
    CHECK(N.generators() == std::vector<int>{4, 6, 13});
    CHECK(N.multiplicity() == 4);
    auto in = oracle::numerical_members({4, 6, 13}, 60);
    for (int n = 0; n <= 60; ++n) CHECK(N.contains(n) == static_cast<bool>(in[n]));
    CHECK(N.frobenius() == oracle::frobenius({4, 6, 13}));
    CHECK_THROWS_AS(numerical({4, 6}), PreconditionError);
    CHECK_THROWS_AS(numerical({0, 3}), PreconditionError);
  }

  TEST_CASE("Apery sets against brute force") {
    CHECK(numerical({4, 7}).apery(4) == std::vector<int>{0, 7, 14, 21});
    CHECK(numerical({3, 5}).apery(3) == std::vector<int>{0, 5, 10});
    CHECK(numerical({2, 3}).apery(2) == std::vector<int>{0, 3});
    for (auto g : std::vector<std::vector<int>>{{3, 5, 7}, {5, 7, 9}, {4, 6, 13}, {6, 9, 19}, {7, 11}}) {
      auto N = numerical(g);
      for (int w : {g.front(), g.back(), g.front() + g.back()}) {
        CAPTURE(w);
        CHECK(N.apery(w) == oracle::apery(g, w));
      }
    }
    CHECK_THROWS_AS(numerical({3, 5}).apery(4), PreconditionError);
  }

  TEST_CASE("good semigroup round trip") {
    auto N = numerical({3, 5, 7});
    auto G = N.as_good();
    CHECK(G.dim() == 1);
    CHECK(G.conductor() == Point{5});
    CHECK(NumericalSemigroup::from_good(G) == N);
    CHECK(validate(G).ok());
  }

  TEST_CASE("tau values and the plane branch criterion") {
    CHECK(tau_values({4, 6, 13}) == std::vector<int>{1, 1});
    CHECK(tau_values({3, 5, 7}) == std::vector<int>{2, 1});
    CHECK(is_plane_branch({4, 6, 13}));
    CHECK(is_plane_branch({2, 3}));
    CHECK(is_plane_branch({4, 7}));
    CHECK_FALSE(is_plane_branch({3, 5, 7}));
    auto p = PlaneBranchProfile::from_generators({4, 6, 13});
    CHECK(p.apery == std::vector<int>{0, 6, 13, 19});
    CHECK(p.apery == oracle::apery({4, 6, 13}, 4));
  }

  TEST_CASE("classical blowups") {
    auto up = [](std::vector<int> g) { return blowup_numerical(PlaneBranchProfile::from_generators(g)); };
    CHECK(up({2, 3}) == numerical({1}));
    CHECK(up({3, 5}) == numerical({2, 3}));
    CHECK(up({4, 7}) == numerical({3, 4}));
    CHECK(up({4, 6, 13}) == numerical({2, 5}));
    // The shifted set is the Apery set of the blowup.
    CHECK(up({4, 7}).apery(4) == std::vector<int>{0, 3, 6, 9});
    CHECK(up({3, 5}).apery(3) == std::vector<int>{0, 2, 4});
    CHECK(up({4, 6, 13}).apery(4) == oracle::apery({2, 5}, 4));
    CHECK_THROWS_AS(up({3, 5, 7}), PreconditionError);
  }

  TEST_CASE("Apery symmetry of plane branches") {
    for (auto g : std::vector<std::vector<int>>{{2, 3}, {3, 5}, {4, 7}, {4, 6, 13}}) {
      auto r = branch_symmetry(PlaneBranchProfile::from_generators(g));
      CHECK_MESSAGE(r.ok(), r.str());
    }
  }
}
