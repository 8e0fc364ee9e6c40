#include <doctest.h>

#include "goodsg/kernels.hpp"
#include "goodsg/lattice.hpp"

using namespace goodsg;

TEST_SUITE("lattice") {
  TEST_CASE("meet, join and the two orders") {
    Point a{3, 7}, b{5, 2};
    CHECK(meet(a, b) == Point{3, 2});
    CHECK(join(a, b) == Point{5, 7});
    CHECK(leq(Point{1, 1}, Point{1, 2}));
    CHECK_FALSE(dominates(Point{1, 1}, Point{1, 2}));
    CHECK(dominates(Point{0, 1}, Point{1, 2}));
    CHECK(leqleq(a, a));
    CHECK_THROWS_AS(meet(Point{1}, Point{1, 2}), DimensionMismatch);
  }

  TEST_CASE("index sets") {
    auto F = IndexSet::of(3, {1, 3});
    CHECK(F.contains(0));
    CHECK_FALSE(F.contains(1));
    CHECK(F.hat() == IndexSet::of(3, {2}));
    CHECK(proper_subsets(3).size() == 6);
    CHECK(proper_subsets(2).size() == 2);
  }

  TEST_CASE("Delta membership") {
    Point a{2, 2, 2};
    auto F = IndexSet::of(3, {1});
    CHECK(in_delta(Point{2, 3, 3}, a, F));
    CHECK_FALSE(in_delta(Point{2, 2, 3}, a, F));
    CHECK(in_delta_tilde(Point{2, 2, 3}, a, F));
    CHECK_FALSE(in_delta_tilde(a, a, F));
    CHECK(in_delta_union(Point{2, 5, 9}, a));
    CHECK_FALSE(in_delta_union(Point{3, 5, 9}, a));
  }

  TEST_CASE("scan_delta enumerates capped representatives") {
    // Delta_1((1,-3)) capped at (4,4): x = 1, y in [0, 4].
    std::vector<Point> seen;
    scan_delta(Point{1, -3}, IndexSet::of(2, {1}), Point{4, 4}, [&](const Point& x) {
      seen.push_back(x);
      return true;
    });
    REQUIRE(seen.size() == 5);
    CHECK(seen.front() == Point{1, 0});
    CHECK(seen.back() == Point{1, 4});
    // A fixed coordinate below zero leaves nothing.
    int n = 0;
    scan_delta(Point{-1, 2}, IndexSet::of(2, {1}), Point{4, 4}, [&](const Point&) { return ++n, true; });
    CHECK(n == 0);
    // Early stop is reported.
    CHECK_FALSE(scan_delta(Point{0, 0}, IndexSet::of(2, {2}), Point{4, 4}, [](const Point&) { return false; }));
  }

  TEST_CASE("scan_delta_tilde skips the point only when it is a real representative") {
    int n = 0;
    scan_delta_tilde(Point{1, 1}, IndexSet::of(2, {1}), Point{3, 3}, [&](const Point&) { return ++n, true; });
    CHECK(n == 2);  // (1,2), (1,3)
    n = 0;
    scan_delta_tilde(Point{1, 3}, IndexSet::of(2, {1}), Point{3, 3}, [&](const Point&) { return ++n, true; });
    CHECK(n == 1);  // the ray (1, >=3) still has points above (1,3)
  }

  TEST_CASE("ray comparisons") {
    RayBox rb(Point{5, 5});
    CHECK(rb.cap(Point{9, 2}) == Point{5, 2});
    CHECK(rb.gt(5, 5, 0));
    CHECK_FALSE(rb.gt(4, 4, 0));
    CHECK(rb.dominates(Point{1, 5}, Point{2, 5}));
    CHECK_FALSE(dominates(Point{1, 5}, Point{2, 5}));
    CHECK(rb.in_delta(Point{5, 3}, Point{5, 3}, IndexSet::of(2, {2})));
  }

  TEST_CASE("box indexing round trip") {
    Box b(Point{1, 0, 2}, Point{3, 4, 5});
    CHECK(b.size() == 3 * 5 * 4);
    for (std::size_t k = 0; k < b.size(); ++k) CHECK(b.index(b.point(k)) == k);
    CHECK_FALSE(b.inside(Point{0, 0, 2}));
  }

  TEST_CASE("consecutive successors") {
    PointSet A{{0, 0}, {1, 2}, {2, 1}, {2, 2}, {3, 3}};
    auto in = [&](const Point& p) { return A.contains(p); };
    auto succ = consecutive_successors(Point{0, 0}, Point{3, 3}, in);
    CHECK(PointSet(succ) == PointSet{{1, 2}, {2, 1}});
    CHECK(consecutive_in(A, Point{0, 0}, Point{1, 2}));
    CHECK_FALSE(consecutive_in(A, Point{0, 0}, Point{2, 2}));
  }

  TEST_CASE("point set algebra") {
    PointSet a{{1, 1}, {0, 2}}, b{{0, 2}, {3, 0}};
    CHECK(set_union(a, b).size() == 3);
    CHECK(set_intersection(a, b) == PointSet{{0, 2}});
    CHECK(set_difference(a, b) == PointSet{{1, 1}});
    CHECK(a[0] == Point{0, 2});  // sorted
  }
}
