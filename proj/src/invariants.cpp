#include "goodsg/invariants.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "goodsg/duality.hpp"
#include "goodsg/wellbehaved.hpp"

namespace goodsg {

ComplementContext ComplementContext::make(std::string name, const GoodIdeal& E, int margin) {
  return {std::move(name), E.parent(), E, partition(complement(E.parent(), E, margin))};
}

ComplementContext ComplementContext::apery(std::string name, const GoodSemigroup& S, const Point& w, int margin) {
  return make(std::move(name), principal_ideal(S, w), margin);
}

bool all_ok(const std::vector<CheckReport>& reps) {
  return std::all_of(reps.begin(), reps.end(), [](const CheckReport& r) { return r.ok(); });
}

std::size_t total_failures(const std::vector<CheckReport>& reps) {
  std::size_t n = 0;
  for (const auto& r : reps) n += r.failures.size();
  return n;
}

std::optional<Point> delta_minimum(const GoodSemigroup& S, const Point& p, int k, const Point& hi) {
  const int d = p.dim();
  if (p[k] < 0 || p[k] > hi[k]) return std::nullopt;
  Point lo(d), top(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = j == k ? p[k] : std::max(p[j] + 1, 0);
    top[j] = j == k ? p[k] : hi[j];
  }
  std::optional<Point> m;
  for_each_in_box(lo, top, [&](const Point& x) {
    if (S.contains(x)) m = m ? meet(*m, x) : x;
    return true;
  });
  return m;
}

namespace {

using Fn = std::function<void(const Point&, std::vector<std::string>&, std::size_t&)>;

// Runs fn on every point of [lo, hi]; failures come back in box order.
CheckReport sweep(std::string name, const Point& lo, const Point& hi, Exec exec, const Fn& fn) {
  Box box(lo, hi);
  std::vector<std::size_t> counts(box.size(), 0);
  auto fails = kernels::gather<std::string>(
      box.size(), [&](std::size_t k, std::vector<std::string>& out) { fn(box.point(k), out, counts[k]); }, exec);
  CheckReport r{std::move(name), 0, std::move(fails)};
  for (auto c : counts) r.checked += c;
  return r;
}

std::string lv(int i) { return i ? "A" + std::to_string(i) : "E"; }

struct Env {
  const GoodSemigroup& S;
  const GoodIdeal& E;
  const LevelPartition& P;
  Point T;
  int d;

  int level(const Point& p) const { return P.level_of_real(p); }
  bool in_A(const Point& p) const { return level(p) != 0; }
  // Every S-element of the (tilde) Delta set lies in A.
  bool delta_inside(const Point& p, const IndexSet& F, bool tilde) const {
    auto f = [&](const Point& x) { return !S.contains(x) || P.level_of(x) != 0; };
    return tilde ? scan_delta_tilde(p, F, T, f) : scan_delta(p, F, T, f);
  }
  bool delta_has(const Point& p, const IndexSet& F, bool tilde, bool want_E) const {
    auto f = [&](const Point& x) { return !(S.contains(x) && (!want_E || E.contains(x))); };
    return !(tilde ? scan_delta_tilde(p, F, T, f) : scan_delta(p, F, T, f));
  }
  // Min level over Delta^S_F(p) ∩ A, 0 if that set is empty.
  int min_level(const Point& p, const IndexSet& F) const {
    int m = 0;
    scan_delta(p, F, T, [&](const Point& x) {
      if (!S.contains(x)) return true;
      int l = P.level_of(x);
      if (l && (m == 0 || l < m)) m = l;
      return true;
    });
    return m;
  }
  std::vector<Point> successors(const Point& a) const {
    Point hi = a + Point(d, 1);
    for (int j = 0; j < d; ++j) hi[j] = std::max(hi[j], S.conductor()[j]);
    return consecutive_successors(a, hi, [&](const Point& x) { return S.contains(x); });
  }
  IndexSet equal_positions(const Point& a, const Point& b) const {
    std::uint32_t m = 0;
    for (int j = 0; j < d; ++j)
      if (a[j] == b[j]) m |= 1u << j;
    return IndexSet(d, m);
  }
};

// Bitsets of levels strictly below / above each point of [0, W], `words`
// 64-bit words per point (bit l stands for level l).
struct LevelMasks {
  Box box;
  std::size_t words = 1;
  std::vector<std::uint64_t> lower, upper;

  bool test(const std::vector<std::uint64_t>& v, std::size_t k, int l) const {
    return v[k * words + l / 64] >> (l % 64) & 1u;
  }
  // Smallest level other than `skip` set in both lower and upper of k; 0 if none.
  int common(std::size_t k, int skip) const {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t both = lower[k * words + w] & upper[k * words + w];
      if (skip > 0 && static_cast<std::size_t>(skip / 64) == w) both &= ~(std::uint64_t{1} << (skip % 64));
      if (both) return static_cast<int>(w * 64) + std::countr_zero(both);
    }
    return 0;
  }
};

LevelMasks level_masks(const Env& env, const Point& W) {
  LevelMasks m{Box(Point(env.d), W), static_cast<std::size_t>(env.P.size()) / 64 + 1, {}, {}};
  const std::size_t n = m.box.size(), nw = m.words;
  m.lower.assign(n * nw, 0);
  m.upper.assign(n * nw, 0);
  std::vector<int> lvl(n);
  for (std::size_t k = 0; k < n; ++k) lvl[k] = env.level(m.box.point(k));
  auto absorb = [&](std::vector<std::uint64_t>& v, std::size_t k, std::size_t q) {
    for (std::size_t w = 0; w < nw; ++w) v[k * nw + w] |= v[q * nw + w];
    if (lvl[q]) v[k * nw + lvl[q] / 64] |= std::uint64_t{1} << (lvl[q] % 64);
  };
  for (std::size_t k = 0; k < n; ++k) {
    Point x = m.box.point(k);
    for (int j = 0; j < env.d; ++j)
      if (x[j] > 0) {
        Point y = x;
        --y[j];
        absorb(m.lower, k, m.box.index(y));
      }
  }
  for (std::size_t k = n; k-- > 0;) {
    Point x = m.box.point(k);
    for (int j = 0; j < env.d; ++j)
      if (x[j] < W[j]) {
        Point y = x;
        ++y[j];
        absorb(m.upper, k, m.box.index(y));
      }
  }
  return m;
}

}  // namespace

std::vector<CheckReport> check_level_laws(const ComplementContext& ctx, Exec exec) {
  const Env env{ctx.S, ctx.E, ctx.P, ctx.P.top(), ctx.S.dim()};
  const int d = env.d;
  const Point zero(d), T = env.T, T1 = T + Point(d, 1);
  std::vector<CheckReport> out;

  // Both clauses of the level-comparison theorem, over delta in S, nonempty
  // proper G and consecutive beta in Delta_F(delta) with F ⊇ Ĝ.
  out.push_back(sweep("level comparison theorem", zero, T, exec, [&](const Point& delta, auto& fails, auto& n) {
    if (!env.S.contains(delta)) return;
    auto succ = env.successors(delta);
    for (const auto& G : proper_subsets(d)) {
      const IndexSet Gh = G.hat();
      const int h = env.min_level(delta, G);
      if (h == 0 || !env.delta_inside(delta, Gh, false)) continue;
      for (const auto& beta : succ) {
        const IndexSet F = env.equal_positions(delta, beta);
        if (F.is_empty() || !Gh.subset_of(F)) continue;
        if (!env.delta_inside(delta, F, true)) continue;
        ++n;
        int i = env.level(beta);
        if (i == 0 || i > h)
          fails.push_back("clause 1 at delta=" + delta.str() + " G=" + G.str() + ": beta=" + beta.str() + " in " +
                          lv(i) + ", min level " + std::to_string(h));
      }
      if (env.in_A(delta) && env.delta_inside(delta, Gh, true)) {
        ++n;
        if (env.level(delta) >= h)
          fails.push_back("clause 2 at delta=" + delta.str() + " G=" + G.str() + ": level " +
                          std::to_string(env.level(delta)) + " not below " + std::to_string(h));
      }
    }
  }));

  // Consecutive theta in Delta_G(alpha) with Delta~^E_Ĝ(alpha) nonempty
  // stays in the level of alpha.
  out.push_back(sweep("same-level successor theorem", zero, T, exec, [&](const Point& a, auto& fails, auto& n) {
    const int i = env.level(a);
    if (i == 0) return;
    for (const auto& th : env.successors(a)) {
      const IndexSet G = env.equal_positions(a, th);
      if (!env.delta_has(a, G.hat(), true, true)) continue;
      ++n;
      if (env.level(th) != i)
        fails.push_back(a.str() + " in A" + std::to_string(i) + ", successor " + th.str() + " in " +
                        lv(env.level(th)));
    }
  }));

  const LevelMasks masks = level_masks(env, T1);
  out.push_back(sweep("in-between lemma", zero, T, exec, [&](const Point& x, auto& fails, auto& n) {
    if (!env.S.contains(x)) return;
    ++n;
    const int l = env.level(x);
    if (int i = masks.common(masks.box.index(x), l)) {
      fails.push_back(x.str() + " in " + lv(l) + " lies between two elements of A" + std::to_string(i));
    }
  }));

  out.push_back(sweep("lower neighbour", zero, T, exec, [&](const Point& x, auto& fails, auto& n) {
    const int i = env.level(x);
    if (i <= 1) return;
    ++n;
    if (!masks.test(masks.lower, masks.box.index(x), i - 1))
      fails.push_back(x.str() + " in A" + std::to_string(i) + " has no smaller element of A" + std::to_string(i - 1));
  }));

  // Minimal elements of Delta^S(alpha) ⊆ A share one level.
  out.push_back(sweep("Delta minima share a level", Point(d, -1), T, exec, [&](const Point& a, auto& fails, auto& n) {
    bool nonempty = false, inside = true;
    for (int k = 0; k < d && inside; ++k) {
      IndexSet F(d, 1u << k);
      nonempty = nonempty || env.delta_has(a, F, false, false);
      inside = env.delta_inside(a, F, false);
    }
    if (!nonempty || !inside) return;
    std::vector<Point> mins;
    for (int k = 0; k < d; ++k)
      if (auto m = delta_minimum(env.S, a, k, T1)) mins.push_back(*m);
    std::set<int> levels;
    for (const auto& m : mins) {
      bool minimal = std::none_of(mins.begin(), mins.end(), [&](const Point& o) { return o != m && leq(o, m); });
      if (minimal) levels.insert(env.level(m));
    }
    ++n;
    if (levels.size() != 1) fails.push_back("minimal elements of Delta^S(" + a.str() + ") span several levels");
  }));

  // Capped, ray-aware laws over pairs of level points.
  const RayBox rb = ctx.P.rays();
  const int N = ctx.P.size();
  std::vector<std::pair<Point, int>> pts;
  for (int i = 1; i <= N; ++i)
    for (const auto& a : ctx.P.level(i)) pts.emplace_back(a, i);
  CheckReport dirs{"all directions to the next level", 0, {}};
  CheckReport basic{"domination and order laws", 0, {}};
  auto fails = kernels::gather<std::pair<int, std::string>>(
      pts.size(),
      [&](std::size_t k, auto& o) {
        const auto& [a, i] = pts[k];
        if (i < N)
          for (int c = 0; c < d; ++c) {
            bool found = false;
            for (const auto& b : ctx.P.level(i + 1))
              if (leq(a, b) && rb.gt(b[c], a[c], c)) {
                found = true;
                break;
              }
            if (!found)
              o.push_back({0, a.str() + " in A" + std::to_string(i) + ": nothing in A" + std::to_string(i + 1) +
                                  " above it that grows coordinate " + std::to_string(c + 1)});
          }
        for (const auto& [b, j] : pts) {
          if (j >= i && rb.dominates(b, a))
            o.push_back({1, b.str() + " in A" + std::to_string(j) + " is << " + a.str() + " in A" + std::to_string(i)});
          if (leq(a, b) && j < i)
            o.push_back({1, b.str() + " >= " + a.str() + " but sits in a lower level"});
        }
        if (i < N && std::none_of(ctx.P.level(i + 1).begin(), ctx.P.level(i + 1).end(),
                                  [&](const Point& b) { return leq(a, b); }))
          o.push_back({1, a.str() + " has nothing above it in A" + std::to_string(i + 1)});
      },
      exec);
  dirs.checked = basic.checked = pts.size();
  for (auto& [w, s] : fails) (w == 0 ? dirs : basic).fail(std::move(s));
  out.push_back(std::move(dirs));
  out.push_back(std::move(basic));
  return out;
}

std::vector<CheckReport> check_symmetric_laws(const ComplementContext& ctx, Exec exec) {
  if (!is_symmetric_complement(ctx.S, ctx.E, ctx.P))
    throw PreconditionError(ctx.name + ": not a symmetric complement");
  const Env env{ctx.S, ctx.E, ctx.P, ctx.P.top(), ctx.S.dim()};
  const int d = env.d, N = ctx.P.size();
  const Point zero(d), T = env.T, T1 = T + Point(d, 1), gE = ctx.E.gamma();
  std::vector<CheckReport> out;

  out.push_back(sweep("empty E-directions give dual directions", zero, T, exec, [&](const Point& b, auto& fails, auto& n) {
    if (!env.in_A(b)) return;
    const Point p = gE - b;
    const std::uint32_t full = (1u << d) - 1u;
    for (std::uint32_t m = 1; m <= full; ++m) {
      IndexSet G(d, m);
      if (env.delta_has(b, G, true, true)) continue;
      ++n;
      bool any = false;
      for (int k = 0; k < d && !any; ++k)
        if (G.contains(k)) any = env.delta_has(p, IndexSet(d, 1u << k), false, false);
      if (!any) fails.push_back("beta=" + b.str() + " G=" + G.str() + ": no k in G with Delta^S_k(" + p.str() + ") nonempty");
    }
  }));

  out.push_back(sweep("dual Delta avoids low levels", zero, T, exec, [&](const Point& a, auto& fails, auto& n) {
    const int i = env.level(a);
    if (i == 0) return;
    ++n;
    const Point p = gE - a;
    for (int k = 0; k < d; ++k)
      scan_delta(p, IndexSet(d, 1u << k), T, [&](const Point& x) {
        if (!env.S.contains(x)) return true;
        int j = ctx.P.level_of(x);
        if (j != 0 && j < N - i + 1) {
          fails.push_back("alpha=" + a.str() + " in A" + std::to_string(i) + ": " + x.str() + " in A" + std::to_string(j));
          return false;
        }
        return true;
      });
  }));

  out.push_back(sweep("dual Delta minima in the dual level", zero, T, exec, [&](const Point& a, auto& fails, auto& n) {
    const int i = env.level(a);
    if (i == 0) return;
    const Point p = gE - a;
    std::vector<Point> mins;
    for (int k = 0; k < d; ++k)
      if (auto m = delta_minimum(env.S, p, k, T1)) mins.push_back(*m);
    for (const auto& m : mins) {
      if (std::any_of(mins.begin(), mins.end(), [&](const Point& o) { return o != m && leq(o, m); })) continue;
      ++n;
      if (env.level(m) != N - i + 1)
        fails.push_back("alpha=" + a.str() + " in A" + std::to_string(i) + ": minimal " + m.str() + " in " +
                        lv(env.level(m)) + ", expected A" + std::to_string(N - i + 1));
    }
  }));
  return out;
}

std::vector<CheckReport> check_wellbehaved_laws(const ComplementContext& ctx, Exec exec) {
  const Env env{ctx.S, ctx.E, ctx.P, ctx.P.top(), ctx.S.dim()};
  const int d = env.d, N = ctx.P.size();
  const RayBox rb = ctx.P.rays();
  std::vector<CheckReport> out;

  CheckReport dom{"domination by the next level implies well-behaved", 1, {}};
  bool dominated = true;
  for (int i = 1; i < N && dominated; ++i)
    for (const auto& a : ctx.P.level(i))
      if (std::none_of(ctx.P.level(i + 1).begin(), ctx.P.level(i + 1).end(),
                       [&](const Point& b) { return rb.dominates(a, b); })) {
        dominated = false;
        break;
      }
  const bool wb = is_well_behaved(ctx.S, ctx.E, ctx.P, exec);
  if (dominated && !wb) dom.fail("every level is dominated by the next, yet the complement is not well-behaved");
  out.push_back(std::move(dom));

  if (d == 2) {
    CheckReport agree{"three-way agreement (d = 2)", 1, {}};
    D2Equivalences q = d2_conditions(ctx.S, ctx.E, ctx.P);
    if (!q.agree())
      agree.fail(std::string("well-behaved=") + (q.well_behaved ? "1" : "0") + " meets=" +
                 (q.same_level_meets ? "1" : "0") + " domination=" + (q.dominated_by_next ? "1" : "0"));
    out.push_back(std::move(agree));
  }
  if (!wb) return out;

  // Delta^S_F(w) ⊆ A nonempty lies in one level; for d = 2 also Delta^S(w).
  out.push_back(sweep("Delta sets inside A lie in one level", Point(d, -1), env.T, exec,
                      [&](const Point& w, auto& fails, auto& n) {
                        std::vector<IndexSet> Fs = proper_subsets(d);
                        if (d == 2) Fs.push_back(IndexSet(d, 0));  // marker for the whole Delta^S(w)
                        for (const auto& F : Fs) {
                          std::set<int> levels;
                          bool bad = false;
                          auto visit = [&](const Point& x) {
                            if (!env.S.contains(x)) return true;
                            int l = ctx.P.level_of(x);
                            if (l == 0) bad = true;
                            levels.insert(l);
                            return !bad;
                          };
                          if (F.is_empty())
                            for (int k = 0; k < d && !bad; ++k) scan_delta(w, IndexSet(d, 1u << k), env.T, visit);
                          else
                            scan_delta(w, F, env.T, visit);
                          if (bad || levels.empty()) continue;
                          ++n;
                          if (levels.size() != 1)
                            fails.push_back("Delta^S_" + (F.is_empty() ? std::string("") : F.str()) + "(" + w.str() +
                                            ") meets " + std::to_string(levels.size()) + " levels");
                        }
                      }));

  if (d == 2) {
    CheckReport shares{"level elements share a coordinate with a theta", 0, {}};
    for (int i = 1; i <= N; ++i) {
      try {
        LevelStructure ls = classify_level(ctx.S, ctx.P, i);
        shares.checked += ls.elements.size();
        for (const auto& a : ls.no_shared_coordinate)
          shares.fail(a.str() + " in A" + std::to_string(i) + " shares no coordinate with a theta");
      } catch (const Error& ex) {
        shares.fail(ex.what());
      }
    }
    out.push_back(std::move(shares));
  }
  return out;
}

std::vector<CheckReport> check_product_laws(const ProductContext& ctx, Exec exec) {
  const int d1 = ctx.d1(), d = ctx.S.dim();
  const Point T = ctx.P.top(), T1 = T + Point(d, 1);
  const auto& E1 = ctx.E1;
  const auto& E2 = ctx.E2;
  std::vector<CheckReport> out;

  out.push_back(sweep("factor ideal membership", Point(d), T, exec, [&](const Point& a, auto& fails, auto& n) {
    if (!ctx.S.contains(a)) return;
    ++n;
    auto [a1, a2] = split(a, d1);
    bool lhs = E2.contains(a2);
    auto [t1, t2] = split(T1, d1);
    (void)t2;
    bool rhs = !for_each_in_box(a1, t1, [&](const Point& e1) {
      return e1 == a1 || !ctx.E.contains(concat(e1, a2));
    });
    if (lhs != rhs) fails.push_back(a.str() + ": second factor in E2 is " + (lhs ? "true" : "false"));
    // Mirror statement for the first factor.
    ++n;
    bool lhs1 = E1.contains(a1);
    bool rhs1 = !for_each_in_box(a2, split(T1, d1).second, [&](const Point& e2) {
      return e2 == a2 || !ctx.E.contains(concat(a1, e2));
    });
    if (lhs1 != rhs1) fails.push_back(a.str() + ": first factor in E1 is " + (lhs1 ? "true" : "false"));
  }));

  // Consecutive pairs along one factor: same level iff some delta in the
  // other factor's ideal meets the upper element down to the lower one.
  out.push_back(sweep("level step along a factor", Point(d), T, exec, [&](const Point& a, auto& fails, auto& n) {
    const int i = ctx.P.level_of_real(a);
    if (i == 0) return;
    auto [a1, a2] = split(a, d1);
    auto [T11, T12] = split(T1, d1);
    for (int side = 0; side < 2; ++side) {
      const GoodIdeal& Ef = side ? E1 : E2;        // factor that moves
      const GoodIdeal& Eo = side ? E2 : E1;        // factor that stays
      const Point& fixed = side ? a2 : a1;
      const Point& th = side ? a1 : a2;
      const Point& hiw = side ? T11 : T12;
      if (!Eo.parent().contains(fixed) || Eo.contains(fixed)) continue;
      const GoodSemigroup& Sf = Ef.parent();
      Point hi = th + Point(th.dim(), 1);
      for (int j = 0; j < th.dim(); ++j) hi[j] = std::max(hi[j], Sf.conductor()[j]);
      for (const auto& al : consecutive_successors(th, hi, [&](const Point& x) { return Sf.contains(x); })) {
        Point b = side ? concat(al, fixed) : concat(fixed, al);
        int j = ctx.P.level_of_real(b);
        bool exists = !for_each_in_box(Point(th.dim()), hiw + Point(th.dim(), 1), [&](const Point& dl) {
          return !(Ef.contains(dl) && meet(dl, al) == th);
        });
        ++n;
        int want = exists ? i : i + 1;
        if (j != want)
          fails.push_back(a.str() + " in A" + std::to_string(i) + " -> " + b.str() + " in " + lv(j) + ", expected A" +
                          std::to_string(want));
      }
    }
  }));

  CheckReport sum{"level equals the factor level sum", 0, {}};
  for (int i = 1; i <= ctx.P.size(); ++i)
    for (const auto& a : ctx.P.level(i)) {
      ++sum.checked;
      int l = product_level(ctx, a);
      if (l != i) sum.fail(a.str() + " in A" + std::to_string(i) + " but the factor formula gives " + std::to_string(l));
    }
  out.push_back(std::move(sum));
  return out;
}

}  // namespace goodsg
