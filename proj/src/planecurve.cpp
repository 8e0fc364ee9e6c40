#include "goodsg/planecurve.hpp"

#include <set>
#include <sstream>

#include "goodsg/products.hpp"
#include "goodsg/wellbehaved.hpp"

namespace goodsg {

std::vector<int> tau_values(const std::vector<int>& gens) {
  std::vector<int> tau;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    // The prefix need not have gcd 1, so test membership by a small DP.
    const long long bound = static_cast<long long>(gens[0]) * gens[i];
    int h = 1;
    auto in_prefix = [&](long long n) {
      std::vector<char> reach(n + 1, 0);
      reach[0] = 1;
      for (long long m = 1; m <= n; ++m)
        for (std::size_t t = 0; t < i && !reach[m]; ++t)
          if (m >= gens[t] && reach[m - gens[t]]) reach[m] = 1;
      return reach[n] != 0;
    };
    while (!in_prefix(static_cast<long long>(h + 1) * gens[i])) {
      if (++h > bound) throw ConsistencyError("tau search exceeded g_1 * g_i");
    }
    tau.push_back(h);
  }
  return tau;
}

PlaneBranchProfile PlaneBranchProfile::from_semigroup(const NumericalSemigroup& S) {
  PlaneBranchProfile p;
  p.generators = S.generators();
  p.apery = S.apery(p.generators.front());
  if (p.generators.size() == 1) {  // N itself: Ap = {0}
    p.plane = true;
    return p;
  }
  p.tau = tau_values(p.generators);
  std::set<int> sums{0};
  for (std::size_t i = 1; i < p.generators.size(); ++i) {
    std::set<int> next;
    for (int s : sums)
      for (int l = 0; l <= p.tau[i - 1]; ++l) next.insert(s + l * p.generators[i]);
    sums.swap(next);
  }
  p.plane = std::vector<int>(sums.begin(), sums.end()) == p.apery;
  for (std::size_t i = 1; i + 1 < p.generators.size(); ++i)
    if ((p.tau[i - 1] + 1) * p.generators[i] >= p.generators[i + 1]) p.plane = false;
  return p;
}

PlaneBranchProfile PlaneBranchProfile::from_generators(const std::vector<int>& gens) {
  return from_semigroup(NumericalSemigroup::from_generators(gens));
}

bool is_plane_branch(const std::vector<int>& gens) { return PlaneBranchProfile::from_generators(gens).plane; }

NumericalSemigroup blowup_numerical(const PlaneBranchProfile& S) {
  if (!S.plane) throw PreconditionError("blowup_numerical needs a plane branch");
  const int e = S.e();
  std::vector<int> shifted, gens{e};
  for (std::size_t i = 0; i < S.apery.size(); ++i) {
    shifted.push_back(S.apery[i] - static_cast<int>(i) * e);
    if (shifted.back() > 0) gens.push_back(shifted.back());
  }
  std::sort(shifted.begin(), shifted.end());
  NumericalSemigroup B = NumericalSemigroup::from_generators(gens);
  if (B.apery(e) != shifted) throw ConsistencyError("shifted Apery set is not the Apery set of its closure");
  return B;
}

Point omega_jk(const std::vector<int>& u, const std::vector<int>& v, const Point& e, int j, int k) {
  if (j < 1 || j > static_cast<int>(u.size()) || k < 1 || k > static_cast<int>(v.size()))
    throw PreconditionError("omega_jk index out of range");
  return Point{u[j - 1] - (j - 1) * e[0], v[k - 1] - (k - 1) * e[1]};
}

bool ShiftReport::ok() const {
  return preconditions.empty() && !level_failures.empty() &&
         std::all_of(level_failures.begin(), level_failures.end(), [](const std::string& s) { return s.empty(); });
}

std::string ShiftReport::str() const {
  std::ostringstream os;
  for (const auto& p : preconditions) os << "precondition failed: " << p << "\n";
  for (std::size_t i = 0; i < level_failures.size(); ++i) {
    os << (level_failures[i].empty() ? "PASS" : "FAIL") << "  A" << i + 1 << " = A" << i + 1 << "' + " << i << "e";
    if (!level_failures[i].empty()) os << "  " << level_failures[i];
    os << "\n";
  }
  return os.str();
}

namespace {

// Level i when p - (i-1)e lies in A_i'.
int shifted_level(const LevelPartition& Ap, const Point& e, const Point& p) {
  for (int i = 1; i <= Ap.size(); ++i) {
    Point q = p - (i - 1) * e;
    if (!q.nonnegative()) break;
    if (Ap.level_of_real(q) == i) return i;
  }
  return 0;
}

std::vector<std::string> compare_shift(const LevelPartition& P, const LevelPartition& Ap, const Point& e) {
  const int N = std::max(P.size(), Ap.size());
  Point W = P.top();
  for (int j = 0; j < W.dim(); ++j) W[j] = std::max(W[j], Ap.top()[j] + (N - 1) * e[j]) + 1;
  std::vector<std::string> out(N);
  for_each_in_box(Point(W.dim()), W, [&](const Point& p) {
    int a = P.level_of_real(p), b = shifted_level(Ap, e, p);
    if (a == b) return true;
    for (int i : {a, b})
      if (i > 0 && out[i - 1].empty())
        out[i - 1] = p.str() + " is in level " + std::to_string(a) + " of A and level " + std::to_string(b) +
                     " of the shifted A'";
    return true;
  });
  return out;
}

struct PlaneData {
  Point e;
  LevelPartition P;
  PlaneBranchProfile b1, b2;
};

PlaneData plane_data(const GoodSemigroup& S, int margin, std::vector<std::string>& pre) {
  if (S.dim() != 2) throw DimensionMismatch("plane curve checks need d = 2");
  const Point e = S.multiplicity();
  auto b1 = PlaneBranchProfile::from_semigroup(NumericalSemigroup::from_good(projection(S, IndexSet::of(2, {1}))));
  auto b2 = PlaneBranchProfile::from_semigroup(NumericalSemigroup::from_good(projection(S, IndexSet::of(2, {2}))));
  if (!S.is_local()) pre.push_back("S is not local");
  if (!b1.plane) pre.push_back("first projection is not a plane branch");
  if (!b2.plane) pre.push_back("second projection is not a plane branch");
  if (!is_symmetric(S)) pre.push_back("S is not symmetric");
  LevelPartition P = apery_levels(S, e, margin);
  if (!is_well_behaved(S, principal_ideal(S, e), P)) pre.push_back("Ap(S, e) is not well-behaved");
  return {e, std::move(P), std::move(b1), std::move(b2)};
}

GoodSemigroup product_of(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return direct_product(a.as_good(), b.as_good());
}

// {a in A_i' real, a <= T' : Delta^{S'}(a) ⊆ A'}.
std::vector<PointSet> inside_candidates(const GoodSemigroup& Sp, const LevelPartition& Ap) {
  std::vector<std::vector<Point>> out(Ap.size());
  for_each_in_box(Point(2), Ap.top(), [&](const Point& a) {
    int i = Ap.level_of_real(a);
    if (i == 0) return true;
    bool inside = true;
    for (int k = 0; k < 2 && inside; ++k)
      inside = scan_delta(a, IndexSet(2, 1u << k), Ap.top(),
                          [&](const Point& x) { return !Sp.contains(x) || Ap.level_of(x) != 0; });
    if (inside) out[i - 1].push_back(a);
    return true;
  });
  std::vector<PointSet> sets;
  for (auto& v : out) sets.emplace_back(std::move(v));
  return sets;
}

PointSet level_absolutes(const GoodSemigroup& S, const LevelPartition& P, int i) {
  const RayBox rb = P.rays();
  std::vector<Point> out;
  for (const auto& a : P.level(i))
    if (!rb.has_ray(a) && delta_union_empty(S, a)) out.push_back(a);
  return PointSet(std::move(out));
}

// A_N has no absolutes (j + k - 1 <= e_1 + e_2 - 1 = N - 1), so the
// successor property is checked up to A_{N-1}.
void check_absolute_successors(const GoodSemigroup& S, const LevelPartition& P, const Point& e, CheckReport& rep) {
  for (int i = 2; i < P.size(); ++i)
    for (const auto& a : level_absolutes(S, P, i - 1)) {
      ++rep.checked;
      const Point p = a + e;
      bool found = false;
      for (int k = 0; k < 2 && !found; ++k)
        found = !scan_delta(p, IndexSet(2, 1u << k), P.top(), [&](const Point& x) {
          if (!leq(x, S.conductor())) return true;  // absolutes lie below the conductor
          return !(S.contains(x) && P.level_of(x) == i && delta_union_empty(S, x));
        });
      if (!found)
        rep.fail("absolute " + a.str() + " of A" + std::to_string(i - 1) + ": Delta^S(" + p.str() +
                 ") has no absolute of A" + std::to_string(i));
    }
}

void compare_absolutes(const GoodSemigroup& S, const LevelPartition& P, int i, const PointSet& want, CheckReport& rep) {
  ++rep.checked;
  PointSet got = level_absolutes(S, P, i);
  if (got != want)
    rep.fail("absolutes of A" + std::to_string(i) + " are " + got.str() + ", expected " + want.str());
}

}  // namespace

ShiftReport verify_apery_shift(const GoodSemigroup& S, int margin) {
  ShiftReport rep;
  PlaneData d = plane_data(S, margin, rep.preconditions);
  if (delta_union_empty(S, d.e)) rep.preconditions.push_back("Delta^S(e) is empty (local blowup)");
  if (!d.b1.plane || !d.b2.plane) return rep;
  LevelPartition Ap =
      apery_nonlocal_d2(blowup_numerical(d.b1), blowup_numerical(d.b2), d.e, margin);
  rep.level_failures = compare_shift(d.P, Ap, d.e);
  return rep;
}

ShiftReport verify_apery_shift_compat(const GoodSemigroup& S, const GoodSemigroup& Sprime, int margin) {
  ShiftReport rep;
  PlaneData d = plane_data(S, margin, rep.preconditions);
  LevelPartition Ap = apery_levels(Sprime, d.e, margin);
  rep.level_failures = compare_shift(d.P, Ap, d.e);
  return rep;
}

CheckReport check_absolute_levels(const GoodSemigroup& S, int margin) {
  CheckReport rep{"absolute elements per level", 0, {}};
  std::vector<std::string> pre;
  PlaneData d = plane_data(S, margin, pre);
  if (delta_union_empty(S, d.e)) pre.push_back("Delta^S(e) is empty (local blowup)");
  for (auto& p : pre) rep.fail("precondition: " + p);
  if (!d.b1.plane || !d.b2.plane) return rep;

  const std::vector<int>&u = d.b1.apery, &v = d.b2.apery;
  const int e1 = d.e[0], e2 = d.e[1], N = e1 + e2;
  NumericalSemigroup S1p = blowup_numerical(d.b1), S2p = blowup_numerical(d.b2);
  LevelPartition Ap = apery_nonlocal_d2(S1p, S2p, d.e, margin);
  auto cand = inside_candidates(product_of(S1p, S2p), Ap);
  for (int i = 1; i <= N; ++i) {
    std::vector<Point> om, shifted;
    for (int j = 1; j <= e1; ++j)
      for (int k = 1; k <= e2; ++k)
        if (j + k - 1 == i) {
          om.push_back(omega_jk(u, v, d.e, j, k));
          shifted.push_back(om.back() + (i - 1) * d.e);
        }
    PointSet oms(std::move(om));
    ++rep.checked;
    if (oms != cand[i - 1])
      rep.fail("A" + std::to_string(i) + "': omega set " + oms.str() + " differs from " + cand[i - 1].str());
    compare_absolutes(S, d.P, i, PointSet(std::move(shifted)), rep);
  }
  check_absolute_successors(S, d.P, d.e, rep);
  ++rep.checked;
  Point g = omega_jk(u, v, d.e, e1, e2) + (N - 2) * d.e;
  if (g != S.gamma()) rep.fail("gamma " + S.gamma().str() + " differs from omega_{e1,e2} + (e-2)e = " + g.str());
  return rep;
}

CheckReport check_absolute_levels_compat(const GoodSemigroup& S, const GoodSemigroup& Sprime, int margin) {
  CheckReport rep{"absolute elements per level (caller blowup)", 0, {}};
  std::vector<std::string> pre;
  PlaneData d = plane_data(S, margin, pre);
  for (auto& p : pre) rep.fail("precondition: " + p);
  LevelPartition Ap = apery_levels(Sprime, d.e, margin);
  auto cand = inside_candidates(Sprime, Ap);
  for (int i = 1; i <= d.P.size() && i <= Ap.size(); ++i) {
    std::vector<Point> shifted;
    for (const auto& a : cand[i - 1]) shifted.push_back(a + (i - 1) * d.e);
    compare_absolutes(S, d.P, i, PointSet(std::move(shifted)), rep);
  }
  // The successor property needs Delta^S(e) nonempty, which fails whenever
  // the blowup is local; check it only when it applies.
  if (!delta_union_empty(S, d.e)) check_absolute_successors(S, d.P, d.e, rep);
  return rep;
}

std::string TwoBranchBlowupResult::str() const {
  std::ostringstream os;
  os << "e = " << e.str() << ", S1' = " << S1p.str() << ", S2' = " << S2p.str() << "\n";
  os << "conductor " << S.conductor().str() << ", gamma " << S.gamma().str() << ", " << S.small_elements().size()
     << " small elements\n";
  os << "valid: " << (validation.ok() ? "yes" : "no") << ", local: " << (local ? "yes" : "no")
     << ", symmetric: " << (symmetric ? "yes" : "no") << ", well-behaved: " << (well_behaved ? "yes" : "no")
     << ", Delta^S(e) nonempty: " << (delta_e_nonempty ? "yes" : "no") << "\n";
  os << shift.str();
  for (const auto& p : problems) os << "problem: " << p << "\n";
  return os.str();
}

TwoBranchBlowupResult reconstruct_unchecked(const PlaneBranchProfile& b1, const PlaneBranchProfile& b2, int margin) {
  const Point e{b1.e(), b2.e()};
  const int N = e[0] + e[1];
  NumericalSemigroup S1p = blowup_numerical(b1), S2p = blowup_numerical(b2);
  LevelPartition Ap = apery_nonlocal_d2(S1p, S2p, e, margin);

  // gamma_E = gamma + e is the corner of A_N.
  Point corner = Ap.level(N)[0];
  for (const auto& p : Ap.level(N)) corner = meet(corner, p);
  corner = corner + (N - 1) * e;
  const Point c = corner - e + Point(2, 1);

  auto in_S = [&](const Point& p) {
    for (Point q = p; q.nonnegative(); q = q - e)
      if (shifted_level(Ap, e, q)) return true;
    return false;
  };
  std::vector<std::string> problems;
  std::vector<Point> small;
  for_each_in_box(Point(2), c, [&](const Point& p) {
    if (in_S(p)) small.push_back(p);
    return true;
  });
  if (!in_S(c)) throw ConsistencyError("reconstruction: conductor " + c.str() + " not in the union of shifts");
  GoodSemigroup S(c, PointSet(std::move(small)));
  const Point W = c + Ap.top() + N * e;
  for_each_in_box(Point(2), W, [&](const Point& p) {
    if (in_S(p) == S.contains(p)) return true;
    problems.push_back("union of shifts is not constant past the conductor at " + p.str());
    return false;
  });

  TwoBranchBlowupResult r{S, e, S1p, S2p, product_of(S1p, S2p), Ap, LevelPartition{}, validate(S, margin), false, false, false, false, {}, {}};
  r.problems = std::move(problems);
  if (!r.validation.ok()) r.problems.push_back("not a good semigroup");
  r.local = S.is_local();
  if (!r.local) r.problems.push_back("not local");
  if (S.multiplicity() != e) r.problems.push_back("multiplicity " + S.multiplicity().str() + " differs from e");
  r.symmetric = is_symmetric(S);
  if (!r.symmetric) r.problems.push_back("not symmetric");
  r.delta_e_nonempty = !delta_union_empty(S, e);
  if (!r.delta_e_nonempty) r.problems.push_back("Delta^S(e) is empty");
  if (!r.validation.ok() || S.multiplicity() != e) return r;
  try {
    r.A = apery_levels(S, e, margin);
  } catch (const ConsistencyError& ex) {
    r.problems.push_back(ex.what());
    return r;
  }
  r.well_behaved = is_well_behaved(S, principal_ideal(S, e), r.A);
  if (!r.well_behaved) r.problems.push_back("Apery set not well-behaved");
  r.shift = verify_apery_shift(S, margin);
  if (!r.shift.ok()) r.problems.push_back("shift check failed");
  return r;
}

TwoBranchBlowupResult reconstruct_from_blowup(const PlaneBranchProfile& S1, const PlaneBranchProfile& S2, bool split,
                                              int margin) {
  if (!split) throw PreconditionError("only the split (non-local blowup) case is supported");
  TwoBranchBlowupResult r = reconstruct_unchecked(S1, S2, margin);
  if (!r.ok()) throw ConsistencyError("reconstruction failed: " + r.problems.front());
  return r;
}

CheckReport compare_partitions_planecurve(const GoodSemigroup& S, int margin) {
  CheckReport rep{"generic partition = domination partition", 0, {}};
  CappedComplement A = apery_set(S, S.multiplicity(), margin);
  LevelPartition P = partition(A), D = domination_partition(A);
  if (P.size() != D.size())
    rep.fail(std::to_string(P.size()) + " levels vs " + std::to_string(D.size()) + " domination levels");
  for (int i = 1; i <= std::min(P.size(), D.size()); ++i) {
    ++rep.checked;
    if (P.level(i) != D.level(i))
      rep.fail("level " + std::to_string(i) + ": " + P.level(i).str() + " vs " + D.level(i).str());
  }
  return rep;
}

CheckReport absolutes_in_apery(const GoodSemigroup& S, int margin) {
  CheckReport rep{"absolute elements lie in Ap(S, e)", 0, {}};
  if (delta_union_empty(S, S.multiplicity())) rep.fail("precondition: Delta^S(e) is empty (local blowup)");
  LevelPartition P = apery_levels(S, S.multiplicity(), margin);
  for (const auto& a : absolute_elements(S, S.conductor())) {
    ++rep.checked;
    if (P.level_of_real(a) == 0) rep.fail(a.str() + " is absolute but not in Ap(S, e)");
  }
  return rep;
}

CheckReport shared_coordinates(const GoodSemigroup& S, int margin) {
  CheckReport rep{"elements below gamma + e share a coordinate with an absolute or ray boundary", 0, {}};
  const Point e = S.multiplicity();
  const Point ge = S.gamma() + e;
  LevelPartition P = apery_levels(S, e, margin);
  for (int i = 1; i <= P.size(); ++i) {
    LevelStructure ls;
    try {
      ls = classify_level(S, P, i);
    } catch (const Error& ex) {
      rep.fail(ex.what());
      continue;
    }
    for (std::size_t n = 0; n < ls.elements.size(); ++n) {
      const Point& a = ls.elements[n];
      if (!dominates(a, ge)) continue;
      ++rep.checked;
      // Points on a ray line share their coordinate with the ray's boundary
      // element rather than with an absolute.
      bool shares = false;
      for (int k = 0; k <= ls.r() + 1 && !shares; ++k)
        if (auto t = ls.theta(k)) shares = (*t)[0] == a[0] || (*t)[1] == a[1];
      if (!shares) rep.fail(a.str() + " in A" + std::to_string(i) + " shares no coordinate with a theta");
      if (ls.tags[n].clause >= 4) rep.fail(a.str() + " in A" + std::to_string(i) + " has tag " + ls.tags[n].str());
    }
  }
  return rep;
}

CheckReport branch_symmetry(const PlaneBranchProfile& S) {
  CheckReport rep{"Apery symmetry of " + S.semigroup().str(), 0, {}};
  const auto& u = S.apery;
  const int n = static_cast<int>(u.size());
  for (int j = 1; j <= n; ++j) {
    ++rep.checked;
    if (u[n - 1] != u[j - 1] + u[n - j])
      rep.fail("u_" + std::to_string(n) + " != u_" + std::to_string(j) + " + u_" + std::to_string(n - j + 1));
  }
  return rep;
}

CheckReport ray_coordinates(const GoodSemigroup& S, int margin) {
  CheckReport rep{"ray coordinates of Apery levels", 0, {}};
  const Point e = S.multiplicity();
  const Point g = S.gamma();
  LevelPartition P = apery_levels(S, e, margin);
  const RayBox rb = P.rays();
  for (int axis = 0; axis < 2; ++axis) {
    // axis 0: vertical rays (ray in coordinate 2) at x = s_i.
    const int other = 1 - axis;
    auto b = NumericalSemigroup::from_good(projection(S, IndexSet(2, 1u << axis)));
    const std::vector<int> u = b.apery(e[axis]);
    const int ea = e[axis], eo = e[other];
    for (int i = 1; i <= P.size(); ++i) {
      std::set<int> at;
      for (const auto& a : P.level(i))
        if (rb.is_ray(a, other) && !rb.is_ray(a, axis)) at.insert(a[axis]);
      ++rep.checked;
      std::set<int> want;
      if (i > eo && i - eo <= ea) want.insert(g[axis] + ea - u[ea - (i - eo)]);
      if (at != want) {
        std::string s = "level " + std::to_string(i) + (axis == 0 ? " columns" : " rows") + " {";
        for (int x : at) s += " " + std::to_string(x);
        s += " }, expected {";
        for (int x : want) s += " " + std::to_string(x);
        rep.fail(s + " }");
      }
    }
  }
  return rep;
}

}  // namespace goodsg
