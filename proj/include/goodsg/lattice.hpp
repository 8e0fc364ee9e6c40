#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goodsg/point.hpp"

namespace goodsg {

Point meet(const Point& a, const Point& b);
Point join(const Point& a, const Point& b);
bool leq(const Point& a, const Point& b);
// a << b: strictly smaller in every coordinate.
bool dominates(const Point& a, const Point& b);
bool leqleq(const Point& a, const Point& b);

enum class DeltaKind { strict, tilde, union_ };

// b in Delta_F(a): equal on F, strictly larger off F.
bool in_delta(const Point& b, const Point& a, const IndexSet& F);
// b in tilde-Delta_F(a): equal on F, >= off F, b != a.
bool in_delta_tilde(const Point& b, const Point& a, const IndexSet& F);
// b in Delta(a) = union over single coordinates i of Delta_i(a).
bool in_delta_union(const Point& b, const Point& a);

PointSet delta(const PointSet& ref, const IndexSet& F, const Point& a, DeltaKind kind);
PointSet delta_union(const PointSet& ref, const Point& a);

bool consecutive_in(const PointSet& A, const Point& a, const Point& b);

// Dense row-major index over the integer box [lo, hi].
class Box {
 public:
  Box() = default;
  Box(const Point& lo, const Point& hi);
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  int dim() const { return lo_.dim(); }
  std::size_t size() const { return size_; }
  bool inside(const Point& p) const;
  std::size_t index(const Point& p) const;
  Point point(std::size_t idx) const;

 private:
  Point lo_, hi_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

// Capped box [0, T] where a coordinate equal to T_i stands for every value
// >= T_i (a ray). Comparisons follow that reading.
class RayBox {
 public:
  RayBox() = default;
  explicit RayBox(Point top) : top_(top) {}
  const Point& top() const { return top_; }
  int dim() const { return top_.dim(); }

  Point cap(const Point& p) const;
  bool is_ray(const Point& p, int i) const { return p[i] >= top_[i]; }
  bool has_ray(const Point& p) const;

  // b_i can exceed a_i for some real representatives.
  bool gt(int b, int a, int i) const { return b > a || (a == top_[i] && b == top_[i]); }
  bool dominates(const Point& a, const Point& b) const;
  bool in_delta(const Point& b, const Point& a, const IndexSet& F) const;

 private:
  Point top_;
};

// Enumerates representatives of Delta_F(p) intersected with N^d for p in
// Z^d, with every coordinate capped at `cap`. A predicate that depends only
// on cap(x) is decided exactly by scanning these representatives.
template <class Fn>
bool scan_delta(const Point& p, const IndexSet& F, const Point& cap, Fn&& fn) {
  const int d = p.dim();
  int lo[kMaxDim], hi[kMaxDim];
  for (int j = 0; j < d; ++j) {
    if (F.contains(j)) {
      if (p[j] < 0) return true;
      lo[j] = hi[j] = std::min(p[j], cap[j]);
    } else {
      int l = std::max(p[j] + 1, 0);
      if (l > cap[j]) l = cap[j];
      lo[j] = l;
      hi[j] = cap[j];
    }
  }
  Point x(d);
  for (int j = 0; j < d; ++j) x[j] = lo[j];
  while (true) {
    if (!fn(static_cast<const Point&>(x))) return false;
    int j = d - 1;
    while (j >= 0 && x[j] == hi[j]) {
      x[j] = lo[j];
      --j;
    }
    if (j < 0) return true;
    ++x[j];
  }
}

// Same for tilde-Delta_F(p): >= off F, excluding the point itself.
template <class Fn>
bool scan_delta_tilde(const Point& p, const IndexSet& F, const Point& cap, Fn&& fn) {
  const int d = p.dim();
  int lo[kMaxDim], hi[kMaxDim];
  for (int j = 0; j < d; ++j) {
    if (F.contains(j)) {
      if (p[j] < 0) return true;
      lo[j] = hi[j] = std::min(p[j], cap[j]);
    } else {
      int l = std::max(p[j], 0);
      if (l > cap[j]) l = cap[j];
      lo[j] = l;
      hi[j] = cap[j];
    }
  }
  // When p itself is a representative, skip it unless some free coordinate
  // sits on the cap (then the representative also covers points above p).
  bool p_in = p.nonnegative();
  for (int j = 0; j < d && p_in; ++j)
    if (!F.contains(j) && p[j] >= cap[j]) p_in = false;
  Point x(d);
  for (int j = 0; j < d; ++j) x[j] = lo[j];
  while (true) {
    bool skip = p_in;
    if (skip)
      for (int j = 0; j < d; ++j)
        if (x[j] != std::min(p[j], cap[j])) {
          skip = false;
          break;
        }
    if (!skip && !fn(static_cast<const Point&>(x))) return false;
    int j = d - 1;
    while (j >= 0 && x[j] == hi[j]) {
      x[j] = lo[j];
      --j;
    }
    if (j < 0) return true;
    ++x[j];
  }
}

// Calls fn on every point of [lo, hi]; stops early when fn returns false.
template <class Fn>
bool for_each_in_box(const Point& lo, const Point& hi, Fn&& fn) {
  const int d = lo.dim();
  for (int j = 0; j < d; ++j)
    if (lo[j] > hi[j]) return true;
  Point x = lo;
  while (true) {
    if (!fn(static_cast<const Point&>(x))) return false;
    int j = d - 1;
    while (j >= 0 && x[j] == hi[j]) {
      x[j] = lo[j];
      --j;
    }
    if (j < 0) return true;
    ++x[j];
  }
}

// Minimal elements of {x in [a, hi] : in(x), x != a}: the points consecutive
// to a in the set described by `in`, provided every such point lies in hi.
template <class In>
std::vector<Point> consecutive_successors(const Point& a, const Point& hi, In&& in) {
  std::vector<Point> out;
  if (!leq(a, hi)) return out;
  Box box(a, hi);
  std::vector<std::uint8_t> below(box.size(), 0);  // some member in [a, x], x excluded from a
  const int d = a.dim();
  for (std::size_t k = 0; k < box.size(); ++k) {
    Point x = box.point(k);
    bool any_lower = false;
    for (int j = 0; j < d && !any_lower; ++j) {
      if (x[j] > a[j]) {
        Point y = x;
        --y[j];
        if (below[box.index(y)]) any_lower = true;
      }
    }
    bool mem = (x != a) && in(static_cast<const Point&>(x));
    if (mem && !any_lower) out.push_back(x);
    below[k] = any_lower || mem;
  }
  return out;
}

}  // namespace goodsg
