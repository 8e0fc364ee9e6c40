#include "goodsg/wellbehaved.hpp"

#include <sstream>

#include "goodsg/numerical.hpp"

namespace goodsg {

namespace {

bool in_A(const GoodSemigroup& S, const GoodIdeal& E, const Point& x) { return S.contains(x) && !E.contains(x); }

// Directions F with Delta^S_F(a) nonempty and Delta~^S_F(a) inside A.
std::vector<IndexSet> inside_directions(const GoodSemigroup& S, const GoodIdeal& E, const Point& a) {
  const Point& cap = E.conductor();
  std::vector<IndexSet> out;
  for (const auto& F : proper_subsets(a.dim())) {
    bool nonempty = !scan_delta(a, F, cap, [&](const Point& x) { return !S.contains(x); });
    if (!nonempty) continue;
    bool inside = scan_delta_tilde(a, F, cap, [&](const Point& x) { return !S.contains(x) || !E.contains(x); });
    if (inside) out.push_back(F);
  }
  return out;
}

}  // namespace

std::vector<Point> well_behaved_violations(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P,
                                           Exec exec) {
  const int d = S.dim();
  Box box(Point(d), P.top());
  return kernels::gather<Point>(
      box.size(),
      [&](std::size_t k, std::vector<Point>& out) {
        Point a = box.point(k);
        if (!in_A(S, E, a)) return;
        if (infimum_directions(d, inside_directions(S, E, a))) out.push_back(a);
      },
      exec);
}

bool is_well_behaved(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P, Exec exec) {
  return well_behaved_violations(S, E, P, exec).empty();
}

D2Equivalences d2_conditions(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P) {
  if (S.dim() != 2) throw DimensionMismatch("d2_equivalences needs d = 2");
  D2Equivalences r;
  r.well_behaved = is_well_behaved(S, E, P);

  // Same-level meets, on real points of a window one past the box so that
  // ray points have distinct representatives.
  const RayBox rb = P.rays();
  const Point win = P.top() + Point(2, 1);
  r.same_level_meets = true;
  for (int i = 1; i <= P.size() && r.same_level_meets; ++i) {
    PointSet L = realize(P.level(i), P.top(), win);
    for (std::size_t a = 0; a < L.size() && r.same_level_meets; ++a)
      for (std::size_t b = a + 1; b < L.size(); ++b) {
        Point m = meet(L[a], L[b]);
        bool inA = P.level_of_real(m) != 0;
        if (inA != (m == L[a] || m == L[b])) {
          r.same_level_meets = false;
          break;
        }
      }
  }

  r.dominated_by_next = true;
  for (int i = 1; i < P.size() && r.dominated_by_next; ++i)
    for (const auto& a : P.level(i)) {
      const auto& next = P.level(i + 1);
      if (std::none_of(next.begin(), next.end(), [&](const Point& b) { return rb.dominates(a, b); })) {
        r.dominated_by_next = false;
        break;
      }
    }
  return r;
}

D2Equivalences d2_equivalences(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P) {
  D2Equivalences r = d2_conditions(S, E, P);
  if (!r.agree())
    throw ConsistencyError(std::string("well-behaved conditions disagree: ") + (r.well_behaved ? "1" : "0") +
                           (r.same_level_meets ? "1" : "0") + (r.dominated_by_next ? "1" : "0"));
  return r;
}

std::optional<int> single_line_level(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P,
                                     const Point& w, const IndexSet& F) {
  check_dim(w, S.conductor());
  int lvl = 0;
  bool several = false, any = false;
  scan_delta(w, F, P.top(), [&](const Point& x) {
    if (!S.contains(x)) return true;
    if (E.contains(x)) throw PreconditionError("Delta^S_" + F.str() + "(" + w.str() + ") meets E at " + x.str());
    any = true;
    int l = P.level_of(x);
    if (lvl == 0)
      lvl = l;
    else if (l != lvl)
      several = true;
    return true;
  });
  if (!any) throw PreconditionError("Delta^S_" + F.str() + "(" + w.str() + ") is empty");
  if (several) return std::nullopt;
  return lvl;
}

CheckReport projection_level_bound(const GoodSemigroup& S, const Point& w, const LevelPartition& P) {
  if (S.dim() != 2) throw DimensionMismatch("projection_level_bound needs d = 2");
  if (!S.is_local()) throw PreconditionError("projection_level_bound needs a local semigroup");
  CheckReport rep{"projection level bound", 0, {}};
  const RayBox rb = P.rays();
  for (int axis = 0; axis < 2; ++axis) {
    NumericalSemigroup Sk = NumericalSemigroup::from_good(projection(S, IndexSet(2, 1u << axis)));
    std::vector<int> u = Sk.apery(w[axis]);
    for (int i = 1; i <= static_cast<int>(u.size()) && i <= P.size(); ++i) {
      Point p(2, -1);
      p[axis] = u[i - 1];
      scan_delta(p, IndexSet(2, 1u << axis), P.top(), [&](const Point& x) {
        if (!S.contains(x)) return true;
        ++rep.checked;
        if (P.level_of(x) != i)
          rep.fail("line through " + std::to_string(u[i - 1]) + " on axis " + std::to_string(axis + 1) + ": " +
                   x.str() + " has level " + std::to_string(P.level_of(x)) + ", expected " + std::to_string(i));
        return true;
      });
      for (const auto& a : P.level(i)) {
        ++rep.checked;
        if (rb.is_ray(a, axis) || a[axis] > u[i - 1])
          rep.fail("A" + std::to_string(i) + " element " + a.str() + " exceeds " + std::to_string(u[i - 1]) +
                   " on axis " + std::to_string(axis + 1));
      }
    }
  }
  return rep;
}

CheckReport gamma_line_levels(const GoodSemigroup& S, const Point& w, const LevelPartition& P, const IndexSet& I1) {
  if (!S.is_local()) throw PreconditionError("gamma_line_levels needs a local semigroup");
  CheckReport rep{"gamma line levels " + I1.str(), 0, {}};
  std::vector<int> idx;
  for (int j = 0; j < S.dim(); ++j)
    if (I1.contains(j)) idx.push_back(j);
  const int k = static_cast<int>(idx.size());
  auto proj = [&](const Point& p) {
    Point r(k);
    for (int t = 0; t < k; ++t) r[t] = p[idx[t]];
    return r;
  };
  GoodSemigroup S1 = projection(S, I1);
  LevelPartition P1 = apery_levels(S1, proj(w));
  for_each_in_box(Point(S.dim()), P.top() + Point(S.dim(), 1), [&](const Point& a) {
    if (!S.contains(a)) return true;
    int l1 = P1.level_of_real(proj(a));
    if (l1 == 0) return true;
    ++rep.checked;
    int l = P.level_of_real(a);
    if (l != l1)
      rep.fail(a.str() + " projects to level " + std::to_string(l1) + " but has level " + std::to_string(l));
    return true;
  });
  return rep;
}

std::string LevelTag::str() const {
  static const char* names[] = {"-", "i", "ii", "iii", "iv", "v"};
  std::string s = names[clause];
  if (k >= 0) s += "(k=" + std::to_string(k) + ")";
  return s;
}

std::optional<Point> LevelStructure::theta(int k) const {
  if (k == 0) return theta0;
  if (k == r() + 1) return theta_last;
  if (k >= 1 && k <= r()) return absolutes[k - 1];
  return std::nullopt;
}

std::string LevelStructure::str() const {
  std::ostringstream os;
  os << "level " << level << ", r = " << r() << "\n";
  for (int k = 0; k <= r() + 1; ++k)
    if (auto t = theta(k)) os << "  theta" << k << " = " << t->str() << "\n";
  for (std::size_t n = 0; n < elements.size(); ++n) os << "  " << elements[n].str() << "  " << tags[n].str() << "\n";
  return os.str();
}

LevelStructure classify_points(const std::vector<Point>& elements, const std::optional<Point>& theta0,
                               const std::vector<Point>& absolutes, const std::optional<Point>& theta_last) {
  LevelStructure ls;
  ls.theta0 = theta0;
  ls.absolutes = absolutes;
  std::sort(ls.absolutes.begin(), ls.absolutes.end());
  ls.theta_last = theta_last;
  ls.elements = elements;
  const int r = ls.r();

  for (const auto& a : ls.elements) {
    LevelTag tag;
    auto set = [&](int clause, int k) {
      if (tag.clause == 0) tag = {clause, k};
    };
    if ((theta0 && a[0] == (*theta0)[0] && a[1] > (*theta0)[1]) ||
        (theta_last && a[1] == (*theta_last)[1] && a[0] > (*theta_last)[0]))
      set(1, -1);
    // Vertical segment below theta^(k), down to the meet with theta^(k+1).
    for (int k = 0; k <= r; ++k) {
      auto t = ls.theta(k), u = ls.theta(k + 1);
      if (t && u && a[0] == (*t)[0] && a[1] > (*u)[1] && a[1] <= (*t)[1]) set(2, k);
    }
    // Horizontal segment left of theta^(k), back to the meet with theta^(k-1).
    for (int k = 1; k <= r + 1; ++k) {
      auto t = ls.theta(k - 1), u = ls.theta(k);
      if (t && u && a[1] == (*u)[1] && a[0] > (*t)[0] && a[0] <= (*u)[0]) set(3, k);
    }
    if (!theta_last && r >= 1 && a[0] == ls.absolutes.back()[0] && a[1] < ls.absolutes.back()[1]) set(4, -1);
    if (!theta0 && r >= 1 && a[1] == ls.absolutes.front()[1] && a[0] < ls.absolutes.front()[0]) set(5, -1);
    // An absolute with no neighbour on either side (e.g. A_1 = {0}) meets
    // no segment; ii is kept with its lower bound alone.
    for (int k = 1; k <= r; ++k)
      if (a == ls.absolutes[k - 1]) set(2, k);
    if (tag.clause == 0) ls.unclassified.push_back(a);

    // The printed comparator of clause ii: theta^(k) <= a < theta^(k) ∧ theta^(k+1).
    for (int k = 0; k <= r; ++k) {
      auto t = ls.theta(k), u = ls.theta(k + 1);
      if (!t || !u) continue;
      Point m = meet(*t, *u);
      if (leq(*t, a) && leq(a, m) && a != m && tag.clause != 2) ls.printed_reading_only.push_back(a);
    }
    bool shares = false;
    for (int k = 0; k <= r + 1 && !shares; ++k)
      if (auto t = ls.theta(k)) shares = a[0] == (*t)[0] || a[1] == (*t)[1];
    if (!shares) ls.no_shared_coordinate.push_back(a);
    ls.tags.push_back(tag);
  }
  return ls;
}

LevelStructure classify_level(const GoodSemigroup& S, const LevelPartition& P, int i,
                              const std::optional<Point>& theta0, const std::optional<Point>& theta_last) {
  if (S.dim() != 2) throw DimensionMismatch("classify_level needs d = 2");
  if (i < 1 || i > P.size()) throw PreconditionError("level index out of range");
  const RayBox rb = P.rays();
  const Point& T = P.top();
  const PointSet& L = P.level(i);
  std::vector<Point> abs;
  std::optional<int> vx, hy;  // vertical ray column, horizontal ray row
  for (const auto& a : L) {
    if (rb.is_ray(a, 1)) vx = a[0];
    if (rb.is_ray(a, 0)) hy = a[1];
    if (!rb.has_ray(a) && delta_union_empty(S, a)) abs.push_back(a);
  }
  std::optional<Point> t0 = theta0, tl = theta_last;
  if (!t0 && vx) {
    int s = -1;
    for (int y = 0; y < T[1]; ++y)
      if (S.contains(Point{*vx, y}) && P.level_of(Point{*vx, y}) != i) s = y;
    t0 = Point{*vx, s};
  }
  if (!tl && hy) {
    int s = -1;
    for (int x = 0; x < T[0]; ++x)
      if (S.contains(Point{x, *hy}) && P.level_of(Point{x, *hy}) != i) s = x;
    tl = Point{s, *hy};
  }
  LevelStructure ls = classify_points(std::vector<Point>(L.begin(), L.end()), t0, abs, tl);
  ls.level = i;
  if (!ls.unclassified.empty())
    throw ConsistencyError("level " + std::to_string(i) + ": " + ls.unclassified.front().str() +
                           " satisfies no clause of the level structure");
  return ls;
}

}  // namespace goodsg
