#include "goodsg/semigroup.hpp"

#include <set>
#include <sstream>

namespace goodsg {

GoodSemigroup::GoodSemigroup(Point conductor, PointSet small_elements)
    : c_(conductor), small_(std::move(small_elements)) {
  const int d = c_.dim();
  if (d < 1) throw PreconditionError("semigroup dimension must be >= 1");
  if (!c_.nonnegative()) throw PreconditionError("conductor must be nonnegative");
  for (const auto& p : small_) {
    if (p.dim() != d) throw DimensionMismatch("small element " + p.str() + " has wrong dimension");
    if (!p.nonnegative() || !leq(p, c_))
      throw PreconditionError("small element " + p.str() + " outside [0, c]");
  }
  if (!small_.contains(c_)) throw PreconditionError("conductor " + c_.str() + " missing from small elements");

  box_ = Box(Point(d), c_);
  dense_.assign(box_.size(), 0);
  for (const auto& p : small_) dense_[box_.index(p)] = 1;

  Point hi = c_;
  for (int j = 0; j < d; ++j) hi[j] = std::max(hi[j], 1);
  e_ = hi;
  for_each_in_box(Point(d, 1), hi, [&](const Point& p) {
    if (contains(p)) e_ = meet(e_, p);
    return true;
  });
  local_ = for_each_in_box(Point(d), hi, [&](const Point& p) {
    if (p == Point(d) || !contains(p)) return true;
    return std::all_of(p.begin(), p.end(), [](int v) { return v > 0; });
  });
}

GoodSemigroup GoodSemigroup::from_predicate(const Point& bound,
                                            const std::function<bool(const Point&)>& in) {
  Point c = bound;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < c.dim(); ++i)
      while (c[i] > 0 && conductor_reducible(c, in, i)) {
        --c[i];
        changed = true;
      }
  }
  std::vector<Point> small;
  for_each_in_box(Point(c.dim()), c, [&](const Point& p) {
    if (in(p)) small.push_back(p);
    return true;
  });
  return GoodSemigroup(c, PointSet(std::move(small)));
}

bool GoodSemigroup::contains(const Point& a) const {
  check_dim(a, c_);
  if (!a.nonnegative()) return false;
  return dense_[box_.index(cap(a))] != 0;
}

Point GoodSemigroup::cap(const Point& a) const {
  Point r = a;
  for (int j = 0; j < a.dim(); ++j) r[j] = std::min(r[j], c_[j]);
  return r;
}

bool conductor_reducible(const Point& c, const std::function<bool(const Point&)>& in, int i) {
  // Every point >= c - unit_i caps either to c or to c - unit_i.
  if (c[i] == 0) return false;
  Point q = c;
  --q[i];
  return in(q);
}

std::string Violation::str() const {
  static const char* names[] = {"missing zero", "meet (G1)", "additive closure", "G2", "conductor not minimal",
                                "not in parent semigroup"};
  std::string s = names[static_cast<int>(kind)];
  s += ":";
  for (const auto& w : witnesses) s += " " + w.str();
  return s;
}

std::size_t ValidationReport::count(Violation::Kind k) const {
  return std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == k; });
}

std::string ValidationReport::str(std::size_t max_lines) const {
  std::ostringstream os;
  if (ok()) {
    os << "valid good semigroup (checked box [0, " << box.str() << "])\n";
    return os.str();
  }
  os << violations.size() << " violation(s) on box [0, " << box.str() << "]\n";
  for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i) os << "  " << violations[i].str() << "\n";
  if (violations.size() > max_lines) os << "  ... " << violations.size() - max_lines << " more\n";
  return os.str();
}

namespace {

// epsilon for (G2): eps_i > a_i, eps_j = min where a, b differ, eps_j >= a_j
// where they agree.
bool g2_lift_exists(const GoodSemigroup& S, const Point& a, const Point& b, int i) {
  const Point& c = S.conductor();
  const int d = a.dim();
  Point lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    if (j == i) {
      lo[j] = a[j] + 1;
      hi[j] = std::max(lo[j], c[j]);
    } else if (a[j] == b[j]) {
      lo[j] = a[j];
      hi[j] = std::max(a[j], c[j]);
    } else {
      lo[j] = hi[j] = std::min(a[j], b[j]);
    }
  }
  return !for_each_in_box(lo, hi, [&](const Point& x) { return !S.contains(x); });
}

}  // namespace

ValidationReport validate(const GoodSemigroup& S, int margin, Exec exec) {
  const int d = S.dim();
  ValidationReport rep;
  rep.box = S.conductor() + S.multiplicity() + Point(d, margin);
  Point zero(d);
  if (!S.contains(zero)) rep.violations.push_back({Violation::Kind::missing_zero, {zero}});

  Box box(zero, rep.box);
  std::vector<Point> pts = kernels::filter_box(box, [&](const Point& p) { return S.contains(p); }, exec);

  auto pairs = kernels::gather<Violation>(
      pts.size(),
      [&](std::size_t k, std::vector<Violation>& out) {
        const Point& a = pts[k];
        for (std::size_t j = k + 1; j < pts.size(); ++j) {
          const Point& b = pts[j];
          Point m = meet(a, b);
          if (!S.contains(m)) out.push_back({Violation::Kind::meet, {a, b, m}});
          Point s = a + b;
          if (!S.contains(s)) out.push_back({Violation::Kind::additive, {a, b, s}});
          for (int i = 0; i < d; ++i)
            if (a[i] == b[i] && !g2_lift_exists(S, a, b, i))
              out.push_back({Violation::Kind::g2, {a, b, Point::unit(d, i)}});
        }
        // a + a is not covered by the k < j loop.
        if (!S.contains(a + a)) out.push_back({Violation::Kind::additive, {a, a, a + a}});
      },
      exec);
  rep.violations.insert(rep.violations.end(), pairs.begin(), pairs.end());

  auto in = [&](const Point& p) { return S.contains(p); };
  for (int i = 0; i < d; ++i)
    if (conductor_reducible(S.conductor(), in, i))
      rep.violations.push_back({Violation::Kind::conductor, {S.conductor() - Point::unit(d, i)}});
  return rep;
}

bool delta_nonempty(const GoodSemigroup& S, const Point& p, const IndexSet& F) {
  return !scan_delta(p, F, S.conductor(), [&](const Point& x) { return !S.contains(x); });
}

bool delta_union_empty(const GoodSemigroup& S, const Point& p) {
  for (int i = 0; i < p.dim(); ++i)
    if (delta_nonempty(S, p, IndexSet(p.dim(), 1u << i))) return false;
  return true;
}

bool is_absolute(const GoodSemigroup& S, const Point& a) {
  if (!S.contains(a)) throw PreconditionError("is_absolute: " + a.str() + " not in S");
  return delta_union_empty(S, a);
}

PointSet absolute_elements(const GoodSemigroup& S, const Point& box) {
  std::vector<Point> out;
  for_each_in_box(Point(S.dim()), box, [&](const Point& p) {
    if (S.contains(p) && delta_union_empty(S, p)) out.push_back(p);
    return true;
  });
  return PointSet(std::move(out));
}

bool is_pseudo_frobenius(const GoodSemigroup& S, const Point& a) {
  if (!a.nonnegative() || S.contains(a)) return false;
  const Point zero(S.dim());
  for (const auto& b : S.small_elements())
    if (b != zero && !S.contains(a + b)) return false;
  for (int i = 0; i < S.dim(); ++i)
    for (int k = 1; k <= 2; ++k)
      if (!S.contains(a + S.conductor() + k * Point::unit(S.dim(), i))) return false;
  return true;
}

PointSet pseudo_frobenius(const GoodSemigroup& S, const Point& box) {
  std::vector<Point> out;
  for_each_in_box(Point(S.dim()), box, [&](const Point& p) {
    if (is_pseudo_frobenius(S, p)) out.push_back(p);
    return true;
  });
  return PointSet(std::move(out));
}

bool in_full_delta(const Point& b, const Point& p) {
  if (!b.nonnegative()) return false;
  return in_delta_union(b, p);
}

bool is_symmetric(const GoodSemigroup& S, int band) {
  const int d = S.dim();
  const Point g = S.gamma();
  return for_each_in_box(Point(d, -band), S.conductor() + Point(d, band), [&](const Point& a) {
    return S.contains(a) == delta_union_empty(S, g - a);
  });
}

bool is_almost_symmetric(const GoodSemigroup& S) {
  const int d = S.dim();
  const Point g = S.gamma();
  return for_each_in_box(Point(d), S.conductor() + Point(d, 2), [&](const Point& a) {
    bool lhs = is_pseudo_frobenius(S, a);
    bool rhs = in_full_delta(a, g) || (!S.contains(a) && delta_union_empty(S, g - a));
    return lhs == rhs;
  });
}

GoodSemigroup direct_product(const GoodSemigroup& S1, const GoodSemigroup& S2) {
  const int d1 = S1.dim(), d2 = S2.dim();
  if (d1 + d2 > kMaxDim) throw DimensionMismatch("product dimension exceeds limit");
  auto concat = [&](const Point& a, const Point& b) {
    Point r(d1 + d2);
    for (int j = 0; j < d1; ++j) r[j] = a[j];
    for (int j = 0; j < d2; ++j) r[d1 + j] = b[j];
    return r;
  };
  std::vector<Point> small;
  for (const auto& a : S1.small_elements())
    for (const auto& b : S2.small_elements()) small.push_back(concat(a, b));
  return GoodSemigroup(concat(S1.conductor(), S2.conductor()), PointSet(std::move(small)));
}

GoodSemigroup projection(const GoodSemigroup& S, const IndexSet& axes) {
  if (axes.is_empty() || axes.is_full()) throw PreconditionError("projection axes must be a proper nonempty subset");
  std::vector<int> idx;
  for (int j = 0; j < S.dim(); ++j)
    if (axes.contains(j)) idx.push_back(j);
  const int k = static_cast<int>(idx.size());
  auto proj = [&](const Point& p) {
    Point r(k);
    for (int t = 0; t < k; ++t) r[t] = p[idx[t]];
    return r;
  };
  std::vector<Point> img;
  for (const auto& p : S.small_elements()) img.push_back(proj(p));
  PointSet image(std::move(img));
  Point bound = proj(S.conductor());
  auto in = [&](const Point& x) {
    if (!x.nonnegative()) return false;
    Point y = x;
    for (int t = 0; t < k; ++t) y[t] = std::min(y[t], bound[t]);
    return image.contains(y);
  };
  return GoodSemigroup::from_predicate(bound, in);
}

}  // namespace goodsg
