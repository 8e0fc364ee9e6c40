#include "goodsg/lattice.hpp"

#include <bit>
#include <iterator>
#include <numeric>
#include <sstream>

namespace goodsg {

Point::Point(int dim, int fill) : d_(dim) {
  if (dim < 0 || dim > kMaxDim) throw DimensionMismatch("point dimension out of range");
  for (int i = 0; i < dim; ++i) c_[i] = fill;
}

Point::Point(std::initializer_list<int> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxDim))
    throw DimensionMismatch("point dimension out of range");
  d_ = static_cast<int>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point Point::from(std::span<const int> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxDim))
    throw DimensionMismatch("point dimension out of range");
  Point p(static_cast<int>(coords.size()));
  std::copy(coords.begin(), coords.end(), p.c_.begin());
  return p;
}

Point Point::unit(int dim, int i) {
  Point p(dim);
  p[i] = 1;
  return p;
}

bool Point::nonnegative() const {
  return std::all_of(begin(), end(), [](int v) { return v >= 0; });
}

std::string Point::str() const {
  std::string s = "(";
  for (int i = 0; i < d_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

void check_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("dimension mismatch: " + a.str() + " vs " + b.str());
}

Point operator+(const Point& a, const Point& b) {
  check_dim(a, b);
  Point r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  check_dim(a, b);
  Point r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point operator*(int k, const Point& a) {
  Point r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = k * a[i];
  return r;
}

IndexSet::IndexSet(int dim, std::uint32_t mask) : d_(dim), m_(mask) {
  if (dim < 0 || dim > kMaxDim) throw DimensionMismatch("index set dimension out of range");
  if (mask & ~((1u << dim) - 1u)) throw DimensionMismatch("index out of range");
}

IndexSet IndexSet::of(int dim, std::initializer_list<int> one_based) {
  std::uint32_t m = 0;
  for (int i : one_based) {
    if (i < 1 || i > dim) throw DimensionMismatch("index out of range");
    m |= 1u << (i - 1);
  }
  return IndexSet(dim, m);
}

int IndexSet::size() const { return std::popcount(m_); }

std::string IndexSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < d_; ++i)
    if (contains(i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::vector<IndexSet> proper_subsets(int dim) {
  std::vector<IndexSet> out;
  for (std::uint32_t m = 1; m + 1 < (1u << dim); ++m) out.emplace_back(dim, m);
  return out;
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  for (const auto& p : pts_)
    if (p.dim() != pts_.front().dim()) throw DimensionMismatch("mixed dimensions in point set");
}

std::string PointSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (i) s += ", ";
    s += pts_[i].str();
  }
  return s + "}";
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<Point> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return PointSet(std::move(r));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  std::vector<Point> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return PointSet(std::move(r));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  std::vector<Point> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return PointSet(std::move(r));
}

Point meet(const Point& a, const Point& b) {
  check_dim(a, b);
  Point r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Point join(const Point& a, const Point& b) {
  check_dim(a, b);
  Point r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool leq(const Point& a, const Point& b) {
  check_dim(a, b);
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dominates(const Point& a, const Point& b) {
  check_dim(a, b);
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] >= b[i]) return false;
  return true;
}

bool leqleq(const Point& a, const Point& b) { return a == b || dominates(a, b); }

bool in_delta(const Point& b, const Point& a, const IndexSet& F) {
  check_dim(a, b);
  for (int i = 0; i < a.dim(); ++i) {
    if (F.contains(i) ? b[i] != a[i] : b[i] <= a[i]) return false;
  }
  return true;
}

bool in_delta_tilde(const Point& b, const Point& a, const IndexSet& F) {
  check_dim(a, b);
  if (a == b) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (F.contains(i) ? b[i] != a[i] : b[i] < a[i]) return false;
  }
  return true;
}

bool in_delta_union(const Point& b, const Point& a) {
  for (int i = 0; i < a.dim(); ++i)
    if (in_delta(b, a, IndexSet(a.dim(), 1u << i))) return true;
  return false;
}

PointSet delta(const PointSet& ref, const IndexSet& F, const Point& a, DeltaKind kind) {
  if (kind != DeltaKind::union_ && F.is_full())
    throw PreconditionError("Delta_F needs a proper index set");
  std::vector<Point> r;
  for (const auto& b : ref) {
    bool in = kind == DeltaKind::strict  ? in_delta(b, a, F)
              : kind == DeltaKind::tilde ? in_delta_tilde(b, a, F)
                                         : in_delta_union(b, a);
    if (in) r.push_back(b);
  }
  return PointSet(std::move(r));
}

PointSet delta_union(const PointSet& ref, const Point& a) {
  return delta(ref, IndexSet::empty(a.dim()), a, DeltaKind::union_);
}

bool consecutive_in(const PointSet& A, const Point& a, const Point& b) {
  if (!leq(a, b)) throw PreconditionError("consecutive_in: " + a.str() + " is not <= " + b.str());
  for (const auto& x : A)
    if (x != a && x != b && leq(a, x) && leq(x, b)) return false;
  return true;
}

Box::Box(const Point& lo, const Point& hi) : lo_(lo), hi_(hi) {
  check_dim(lo, hi);
  const int d = lo.dim();
  stride_.assign(d, 0);
  size_ = 1;
  for (int j = d - 1; j >= 0; --j) {
    stride_[j] = size_;
    size_ *= hi[j] >= lo[j] ? static_cast<std::size_t>(hi[j] - lo[j] + 1) : 0;
  }
}

bool Box::inside(const Point& p) const {
  for (int j = 0; j < lo_.dim(); ++j)
    if (p[j] < lo_[j] || p[j] > hi_[j]) return false;
  return true;
}

std::size_t Box::index(const Point& p) const {
  std::size_t k = 0;
  for (int j = 0; j < lo_.dim(); ++j) k += static_cast<std::size_t>(p[j] - lo_[j]) * stride_[j];
  return k;
}

Point Box::point(std::size_t idx) const {
  Point p(lo_.dim());
  for (int j = 0; j < lo_.dim(); ++j) {
    p[j] = lo_[j] + static_cast<int>(idx / stride_[j]);
    idx %= stride_[j];
  }
  return p;
}

Point RayBox::cap(const Point& p) const {
  check_dim(p, top_);
  Point r = p;
  for (int j = 0; j < p.dim(); ++j) r[j] = std::min(r[j], top_[j]);
  return r;
}

bool RayBox::has_ray(const Point& p) const {
  for (int j = 0; j < p.dim(); ++j)
    if (p[j] >= top_[j]) return true;
  return false;
}

bool RayBox::dominates(const Point& a, const Point& b) const {
  for (int j = 0; j < a.dim(); ++j)
    if (!gt(b[j], a[j], j)) return false;
  return true;
}

bool RayBox::in_delta(const Point& b, const Point& a, const IndexSet& F) const {
  for (int j = 0; j < a.dim(); ++j) {
    if (F.contains(j) ? b[j] != a[j] : !gt(b[j], a[j], j)) return false;
  }
  return true;
}

}  // namespace goodsg
