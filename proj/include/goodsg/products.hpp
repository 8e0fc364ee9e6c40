#pragma once

#include "goodsg/levels.hpp"
#include "goodsg/numerical.hpp"

namespace goodsg {

// S = S1 x S2 with E = E1 x E2, plus the factor partitions.
struct ProductContext {
  GoodIdeal E1, E2;
  LevelPartition P1, P2;
  GoodSemigroup S;
  GoodIdeal E;
  LevelPartition P;  // generic partition of S \ E

  static ProductContext make(const GoodIdeal& E1, const GoodIdeal& E2, int margin = 1);
  static ProductContext principal(const GoodSemigroup& S1, const Point& w1, const GoodSemigroup& S2,
                                  const Point& w2, int margin = 1);
  int d1() const { return E1.conductor().dim(); }
  int d2() const { return E2.conductor().dim(); }
};

Point concat(const Point& a, const Point& b);
std::pair<Point, Point> split(const Point& a, int d1);

// lambda_1(a1) + lambda_2(a2) - 1 for a in S \ E.
int product_level(const ProductContext& ctx, const Point& a);

// Closed form for Ap(S1 x S2, w) with numerical factors.
LevelPartition apery_nonlocal_d2(const NumericalSemigroup& S1, const NumericalSemigroup& S2, const Point& w,
                                 int margin = 1);

}  // namespace goodsg
