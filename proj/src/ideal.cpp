#include "goodsg/ideal.hpp"

#include <cstdlib>

namespace goodsg {

GoodIdeal::GoodIdeal(GoodSemigroup parent, Point conductor, PointSet small_elements)
    : parent_(std::make_shared<const GoodSemigroup>(std::move(parent))),
      c_(conductor),
      small_(std::move(small_elements)) {
  check_dim(c_, parent_->conductor());
  for (const auto& p : small_)
    if (!p.nonnegative() || !leq(p, c_)) throw PreconditionError("ideal element " + p.str() + " outside [0, c_E]");
  if (!small_.contains(c_)) throw PreconditionError("ideal conductor missing from its elements");
  box_ = Box(Point(c_.dim()), c_);
  dense_.assign(box_.size(), 0);
  for (const auto& p : small_) dense_[box_.index(p)] = 1;
}

bool GoodIdeal::contains(const Point& a) const {
  check_dim(a, c_);
  if (!a.nonnegative()) return false;
  Point q = a;
  for (int j = 0; j < q.dim(); ++j) q[j] = std::min(q[j], c_[j]);
  return dense_[box_.index(q)] != 0;
}

GoodIdeal principal_ideal(const GoodSemigroup& S, const Point& w) {
  if (!S.contains(w)) throw PreconditionError("principal ideal: " + w.str() + " not in S");
  const Point cE = S.conductor() + w;
  std::vector<Point> small;
  for_each_in_box(Point(S.dim()), cE, [&](const Point& p) {
    if (S.contains(p - w)) small.push_back(p);
    return true;
  });
  return GoodIdeal(S, cE, PointSet(std::move(small)));
}

GoodIdeal product_ideal(const GoodIdeal& E1, const GoodIdeal& E2) {
  GoodSemigroup S = direct_product(E1.parent(), E2.parent());
  const int d1 = E1.conductor().dim(), d2 = E2.conductor().dim();
  auto concat = [&](const Point& a, const Point& b) {
    Point r(d1 + d2);
    for (int j = 0; j < d1; ++j) r[j] = a[j];
    for (int j = 0; j < d2; ++j) r[d1 + j] = b[j];
    return r;
  };
  std::vector<Point> small;
  for (const auto& a : E1.small_elements())
    for (const auto& b : E2.small_elements()) small.push_back(concat(a, b));
  return GoodIdeal(std::move(S), concat(E1.conductor(), E2.conductor()), PointSet(std::move(small)));
}

ValidationReport validate_ideal(const GoodIdeal& E, int margin, Exec exec) {
  const GoodSemigroup& S = E.parent();
  const int d = S.dim();
  ValidationReport rep;
  rep.box = E.conductor() + S.multiplicity() + Point(d, margin);
  Box box(Point(d), rep.box);
  std::vector<Point> pts = kernels::filter_box(box, [&](const Point& p) { return E.contains(p); }, exec);
  std::vector<Point> spts = kernels::filter_box(box, [&](const Point& p) { return S.contains(p); }, exec);

  auto found = kernels::gather<Violation>(
      pts.size(),
      [&](std::size_t k, std::vector<Violation>& out) {
        const Point& a = pts[k];
        if (!S.contains(a)) out.push_back({Violation::Kind::outside_parent, {a}});
        for (const auto& s : spts)
          if (!E.contains(a + s)) {
            out.push_back({Violation::Kind::additive, {a, s, a + s}});
            break;
          }
        for (std::size_t j = k + 1; j < pts.size(); ++j) {
          const Point& b = pts[j];
          Point m = meet(a, b);
          if (!E.contains(m)) out.push_back({Violation::Kind::meet, {a, b, m}});
          for (int i = 0; i < d; ++i) {
            if (a[i] != b[i]) continue;
            Point lo(d), hi(d);
            for (int t = 0; t < d; ++t) {
              if (t == i) {
                lo[t] = a[t] + 1;
                hi[t] = std::max(lo[t], E.conductor()[t]);
              } else if (a[t] == b[t]) {
                lo[t] = a[t];
                hi[t] = std::max(a[t], E.conductor()[t]);
              } else {
                lo[t] = hi[t] = std::min(a[t], b[t]);
              }
            }
            if (for_each_in_box(lo, hi, [&](const Point& x) { return !E.contains(x); }))
              out.push_back({Violation::Kind::g2, {a, b, Point::unit(d, i)}});
          }
        }
      },
      exec);
  rep.violations = std::move(found);
  auto in = [&](const Point& p) { return E.contains(p); };
  for (int i = 0; i < d; ++i)
    if (conductor_reducible(E.conductor(), in, i))
      rep.violations.push_back({Violation::Kind::conductor, {E.conductor() - Point::unit(d, i)}});
  return rep;
}

CappedComplement complement(const GoodSemigroup& S, const GoodIdeal& E, int margin) {
  if (margin < 1) throw PreconditionError("box margin must be >= 1");
  CappedComplement A;
  A.conductor_E = E.conductor();
  A.top = E.conductor() + Point(S.dim(), margin);
  std::vector<Point> pts;
  for_each_in_box(Point(S.dim()), A.top, [&](const Point& p) {
    if (S.contains(p) && !E.contains(p)) pts.push_back(p);
    return true;
  });
  A.points = PointSet(std::move(pts));
  return A;
}

CappedComplement apery_set(const GoodSemigroup& S, const Point& w, int margin) {
  if (w == Point(S.dim())) throw PreconditionError("Apery set of the zero element is empty");
  return complement(S, principal_ideal(S, w), margin);
}

int default_margin() {
  const char* v = std::getenv("GOODSG_BOX_MARGIN");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long m = std::strtol(v, &end, 10);
  if (*end != '\0' || m < 1 || m > 64) throw PreconditionError("GOODSG_BOX_MARGIN must be an integer in [1, 64]");
  return static_cast<int>(m);
}

}  // namespace goodsg
