#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "goodsg/error.hpp"

namespace goodsg {

inline constexpr int kMaxDim = 8;

// Lattice point of Z^d, d <= kMaxDim. Unused slots stay zero so the
// defaulted comparisons are coordinatewise.
class Point {
 public:
  Point() = default;
  explicit Point(int dim, int fill = 0);
  Point(std::initializer_list<int> coords);
  static Point from(std::span<const int> coords);
  static Point unit(int dim, int i);

  int dim() const { return d_; }
  int& operator[](int i) { return c_[i]; }
  int operator[](int i) const { return c_[i]; }
  const int* begin() const { return c_.data(); }
  const int* end() const { return c_.data() + d_; }

  bool nonnegative() const;
  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::array<int, kMaxDim> c_{};
  int d_ = 0;
};

void check_dim(const Point& a, const Point& b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(int k, const Point& a);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.dim());
    for (int v : p) h = h * 1000003u ^ static_cast<std::size_t>(v + 0x9e3779b9);
    return h;
  }
};

// Subset of I = {1..d}, stored as a bitmask over 0-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int dim, std::uint32_t mask);
  static IndexSet of(int dim, std::initializer_list<int> one_based);
  static IndexSet full(int dim) { return IndexSet(dim, (1u << dim) - 1u); }
  static IndexSet empty(int dim) { return IndexSet(dim, 0u); }

  int dim() const { return d_; }
  std::uint32_t mask() const { return m_; }
  bool contains(int i) const { return (m_ >> i) & 1u; }
  int size() const;
  bool is_empty() const { return m_ == 0; }
  bool is_full() const { return m_ == (1u << d_) - 1u; }
  IndexSet hat() const { return IndexSet(d_, ~m_ & ((1u << d_) - 1u)); }
  bool subset_of(const IndexSet& o) const { return (m_ & ~o.m_) == 0; }
  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int d_ = 0;
  std::uint32_t m_ = 0;
};

// All proper nonempty subsets of {1..d}, in increasing mask order.
std::vector<IndexSet> proper_subsets(int dim);

// Sorted, duplicate-free, dimension-homogeneous set of points.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);
  PointSet(std::initializer_list<Point> pts) : PointSet(std::vector<Point>(pts)) {}

  bool contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
  }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  int dim() const { return pts_.empty() ? 0 : pts_.front().dim(); }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }
  std::string str() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);

}  // namespace goodsg
