#include "goodsg/duality.hpp"

#include <sstream>

namespace goodsg {

DualPartition dual_levels(const LevelPartition& P, const Point& anchor, const Membership& amb) {
  const Point& T = P.top();
  check_dim(anchor, T);
  for (int j = 0; j < T.dim(); ++j)
    if (anchor[j] >= T[j]) throw PreconditionError("dual anchor " + anchor.str() + " must lie below the box " + T.str());
  DualPartition out{anchor, T, {}};
  PointSet seen;
  for (int i = 1; i <= P.size(); ++i) {
    std::vector<Point> hits;
    for (const auto& w : P.level(i)) {
      // A ray coordinate of w makes (anchor - w)_j negative for every real
      // representative, and all negative values give the same Delta.
      const Point p = anchor - w;
      for (int k = 0; k < T.dim(); ++k)
        scan_delta(p, IndexSet(T.dim(), 1u << k), T, [&](const Point& x) {
          if (amb(x)) hits.push_back(x);
          return true;
        });
    }
    PointSet now(std::move(hits));
    out.duals.push_back(set_difference(now, seen));
    seen = set_union(seen, now);
  }
  return out;
}

DualPartition dual_levels(const GoodSemigroup& S, const LevelPartition& P, const Point& anchor) {
  return dual_levels(P, anchor, [&](const Point& x) { return S.contains(x); });
}

namespace {

// Delta^S(p) is nonempty and every element lies outside E.
bool delta_inside_A(const GoodSemigroup& S, const GoodIdeal& E, const Point& p, bool& nonempty) {
  nonempty = false;
  bool inside = true;
  for (int k = 0; k < p.dim() && inside; ++k)
    scan_delta(p, IndexSet(p.dim(), 1u << k), E.conductor(), [&](const Point& x) {
      if (!S.contains(x)) return true;
      nonempty = true;
      if (E.contains(x)) inside = false;
      return inside;
    });
  return inside;
}

std::string diff_note(const PointSet& got, const PointSet& want) {
  PointSet extra = set_difference(got, want), missing = set_difference(want, got);
  std::ostringstream os;
  if (!extra.empty()) os << "extra " << extra.str();
  if (!missing.empty()) os << (extra.empty() ? "" : "; ") << "missing " << missing.str();
  return os.str();
}

DualityReport compare(const DualPartition& D, const LevelPartition& P) {
  DualityReport r;
  const int N = P.size();
  for (int i = 1; i <= N; ++i) {
    const PointSet& got = D.duals[i - 1];
    const PointSet& want = P.level(N - i + 1);
    r.pairs.emplace_back(i, N - i + 1);
    r.pass.push_back(got == want);
    r.mismatch.push_back(got == want ? "" : diff_note(got, want));
  }
  return r;
}

}  // namespace

bool is_symmetric_complement(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P) {
  const int d = S.dim();
  if (P.size() == 0 || P.level(1) != PointSet{Point(d)}) return false;
  const Point gE = E.gamma();
  return for_each_in_box(Point(d, -1), P.top(), [&](const Point& a) {
    bool nonempty = false;
    bool inside = delta_inside_A(S, E, gE - a, nonempty);
    bool inE = E.contains(a);
    bool inA = S.contains(a) && !inE;
    return inE == !nonempty && inA == (nonempty && inside);
  });
}

bool DualityReport::ok() const {
  return precondition && std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
}

std::string DualityReport::str() const {
  std::ostringstream os;
  if (!precondition) os << "precondition failed: " << precondition_note << "\n";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    os << (pass[k] ? "PASS" : "FAIL") << "  A" << pairs[k].first << "' = A" << pairs[k].second;
    if (!pass[k]) os << "  " << mismatch[k];
    os << "\n";
  }
  return os.str();
}

DualityReport check_duality(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P) {
  DualityReport r = compare(dual_levels(S, P, E.gamma()), P);
  if (!is_symmetric_complement(S, E, P)) {
    r.precondition = false;
    r.precondition_note = "complement is not a symmetric complement";
  }
  return r;
}

ZWSets build_Z_W(const GoodSemigroup& S, int margin) {
  const int d = S.dim();
  const Point& e = S.multiplicity();
  LevelPartition P = partition(apery_set(S, e, margin));
  ZWSets out;
  out.top = P.top();
  const Point ge = S.gamma() + e;
  int N = 0;
  for (int v : e) N += v;

  std::vector<Point> Z{Point(d)}, W{Point(d)};
  for_each_in_box(Point(d), out.top, [&](const Point& x) {
    if (is_pseudo_frobenius(S, x)) Z.push_back(x);
    if (in_full_delta(x, ge)) W.push_back(x);
    return true;
  });
  for (int i = 2; i <= N - 1 && i <= P.size(); ++i)
    for (const auto& a : P.level(i))
      if (!is_pseudo_frobenius(S, a - e)) W.push_back(a);
  out.Z = PointSet(std::move(Z));
  out.W = PointSet(std::move(W));
  return out;
}

AlmostSymmetricReport check_almost_symmetric_duality(const GoodSemigroup& S, int margin) {
  AlmostSymmetricReport r;
  r.almost_symmetric = is_almost_symmetric(S);
  ZWSets zw = build_Z_W(S, margin);
  r.Zlevels = partition_set(zw.top, zw.Z);
  r.Wlevels = partition_set(zw.top, zw.W);
  auto amb_z = [&](const Point& x) { return S.contains(x) || is_pseudo_frobenius(S, x); };
  r.z = compare(dual_levels(r.Zlevels, S.gamma(), amb_z), r.Zlevels);
  r.w = compare(dual_levels(S, r.Wlevels, S.gamma() + S.multiplicity()), r.Wlevels);
  if (!r.almost_symmetric) {
    r.z.precondition = r.w.precondition = false;
    r.z.precondition_note = r.w.precondition_note = "semigroup is not almost symmetric";
  }
  return r;
}

std::string AlmostSymmetricReport::str() const {
  std::ostringstream os;
  os << "almost symmetric: " << (almost_symmetric ? "yes" : "no") << "\n";
  os << "Z (" << Zlevels.size() << " levels)\n" << z.str();
  os << "W (" << Wlevels.size() << " levels)\n" << w.str();
  return os.str();
}

}  // namespace goodsg
