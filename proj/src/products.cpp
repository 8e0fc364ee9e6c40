#include "goodsg/products.hpp"

namespace goodsg {

Point concat(const Point& a, const Point& b) {
  if (a.dim() + b.dim() > kMaxDim) throw DimensionMismatch("product dimension exceeds limit");
  Point r(a.dim() + b.dim());
  for (int j = 0; j < a.dim(); ++j) r[j] = a[j];
  for (int j = 0; j < b.dim(); ++j) r[a.dim() + j] = b[j];
  return r;
}

std::pair<Point, Point> split(const Point& a, int d1) {
  Point x(d1), y(a.dim() - d1);
  for (int j = 0; j < d1; ++j) x[j] = a[j];
  for (int j = d1; j < a.dim(); ++j) y[j - d1] = a[j];
  return {x, y};
}

ProductContext ProductContext::make(const GoodIdeal& E1, const GoodIdeal& E2, int margin) {
  GoodIdeal E = product_ideal(E1, E2);
  GoodSemigroup S = E.parent();
  return ProductContext{E1,
                        E2,
                        partition(complement(E1.parent(), E1, margin)),
                        partition(complement(E2.parent(), E2, margin)),
                        S,
                        E,
                        partition(complement(S, E, margin))};
}

ProductContext ProductContext::principal(const GoodSemigroup& S1, const Point& w1, const GoodSemigroup& S2,
                                         const Point& w2, int margin) {
  return make(principal_ideal(S1, w1), principal_ideal(S2, w2), margin);
}

int product_level(const ProductContext& ctx, const Point& a) {
  if (!ctx.S.contains(a) || ctx.E.contains(a)) throw PreconditionError("product_level: " + a.str() + " not in S \\ E");
  auto [a1, a2] = split(a, ctx.d1());
  return level_function(ctx.E1.parent(), ctx.P1, a1) + level_function(ctx.E2.parent(), ctx.P2, a2) - 1;
}

LevelPartition apery_nonlocal_d2(const NumericalSemigroup& S1, const NumericalSemigroup& S2, const Point& w,
                                 int margin) {
  if (w.dim() != 2) throw DimensionMismatch("apery_nonlocal_d2 needs a point of N^2");
  if (w[0] <= 0 || w[1] <= 0) throw PreconditionError("apery_nonlocal_d2 needs nonzero components");
  if (!S1.contains(w[0]) || !S2.contains(w[1])) throw PreconditionError(w.str() + " not in S1 x S2");
  const std::vector<int> u = S1.apery(w[0]), v = S2.apery(w[1]);
  const int w1 = w[0], w2 = w[1];
  const Point T{S1.conductor() + w1 + margin, S2.conductor() + w2 + margin};
  // u_{w1+1} = v_{w2+1} = infinity, i.e. the ray coordinate.
  auto U = [&](int i) { return i <= w1 ? u[i - 1] : T[0]; };
  auto V = [&](int j) { return j <= w2 ? v[j - 1] : T[1]; };

  std::vector<std::vector<Point>> levels(w1 + w2);
  levels[0].push_back(Point{0, 0});
  for (int i = 1; i <= w1; ++i)
    for (int j = 1; j <= w2; ++j) {
      auto& L = levels[i + j - 1];
      for (int b = V(j) + 1; b <= V(j + 1); ++b)
        if (S2.contains(b)) L.push_back(Point{U(i), b});
      for (int a = U(i) + 1; a <= U(i + 1); ++a)
        if (S1.contains(a)) L.push_back(Point{a, V(j)});
    }
  std::vector<PointSet> out;
  for (auto& L : levels) out.emplace_back(std::move(L));
  return LevelPartition(T, std::move(out));
}

}  // namespace goodsg
