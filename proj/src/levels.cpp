#include "goodsg/levels.hpp"

#include <functional>
#include <sstream>

namespace goodsg {

std::optional<std::vector<IndexSet>> infimum_directions(int dim, const std::vector<IndexSet>& available) {
  const std::uint32_t full = (1u << dim) - 1u;
  std::vector<char> ok(1u << dim, 0);
  for (const auto& F : available)
    if (!F.is_empty() && !F.is_full()) ok[F.mask()] = 1;

  // Blocks are complements of the chosen F; grow a set partition of I
  // block by block, always covering the lowest uncovered index first.
  std::vector<std::uint32_t> blocks;
  std::function<bool(std::uint32_t)> grow = [&](std::uint32_t covered) {
    if (covered == full) return blocks.size() >= 2;
    const std::uint32_t rest = full & ~covered;
    const std::uint32_t low = rest & (~rest + 1u);
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      if ((sub & low) && sub != full && ok[full & ~sub]) {
        blocks.push_back(sub);
        if (grow(covered | sub)) return true;
        blocks.pop_back();
      }
      if (sub == 0) break;
    }
    return false;
  };
  if (!grow(0)) return std::nullopt;
  std::vector<IndexSet> out;
  for (auto b : blocks) out.emplace_back(dim, full & ~b);
  return out;
}

namespace {

template <class InDelta>
std::optional<InfimumWitness> complete_infimum_impl(const PointSet& A, const Point& a, InDelta&& in_delta_fn) {
  const int d = a.dim();
  std::vector<IndexSet> avail;
  std::vector<Point> least(1u << d);
  for (const auto& F : proper_subsets(d)) {
    // A is sorted, so the first hit is the lexicographically least witness.
    for (const auto& b : A)
      if (in_delta_fn(b, a, F)) {
        avail.push_back(F);
        least[F.mask()] = b;
        break;
      }
  }
  auto dirs = infimum_directions(d, avail);
  if (!dirs) return std::nullopt;
  InfimumWitness w;
  w.directions = *dirs;
  for (const auto& F : w.directions) w.witnesses.push_back(least[F.mask()]);
  return w;
}

}  // namespace

std::optional<InfimumWitness> complete_infimum(const PointSet& A, const Point& a) {
  return complete_infimum_impl(A, a, [](const Point& b, const Point& x, const IndexSet& F) {
    return in_delta(b, x, F);
  });
}

std::optional<InfimumWitness> complete_infimum(const PointSet& A, const Point& a, const RayBox& rb) {
  return complete_infimum_impl(A, a, [&](const Point& b, const Point& x, const IndexSet& F) {
    return rb.in_delta(b, x, F);
  });
}

LevelPartition::LevelPartition(Point top, std::vector<PointSet> levels) : top_(top), levels_(std::move(levels)) {
  for (std::size_t i = 0; i < levels_.size(); ++i)
    for (const auto& p : levels_[i]) {
      if (!index_.emplace(p, static_cast<int>(i) + 1).second)
        throw ConsistencyError("point " + p.str() + " appears in two levels");
    }
}

int LevelPartition::level_of(const Point& capped) const {
  auto it = index_.find(capped);
  return it == index_.end() ? 0 : it->second;
}

int LevelPartition::level_of_real(const Point& p) const {
  if (!p.nonnegative()) return 0;
  return level_of(RayBox(top_).cap(p));
}

PointSet LevelPartition::all_points() const {
  std::vector<Point> pts;
  for (const auto& L : levels_) pts.insert(pts.end(), L.begin(), L.end());
  return PointSet(std::move(pts));
}

LevelPartition partition_set(const Point& top, const PointSet& pts, Exec exec) {
  const RayBox rb(top);
  std::vector<Point> rest(pts.begin(), pts.end());
  std::vector<PointSet> rounds;
  while (!rest.empty()) {
    auto mask = kernels::maximal_mask(rest, rb, exec);
    std::vector<Point> bvec;
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (mask[k]) bvec.push_back(rest[k]);
    PointSet B(bvec);
    std::vector<char> is_inf(B.size(), 0);
    kernels::for_range(
        B.size(), [&](std::size_t k) { is_inf[k] = complete_infimum(B, B[k], rb).has_value(); }, exec);
    std::vector<Point> D;
    for (std::size_t k = 0; k < B.size(); ++k)
      if (!is_inf[k]) D.push_back(B[k]);
    if (D.empty()) throw ConsistencyError("partition stalled: every maximal point is a complete infimum");
    PointSet Dset(std::move(D));
    std::vector<Point> next;
    for (const auto& p : rest)
      if (!Dset.contains(p)) next.push_back(p);
    rest.swap(next);
    rounds.push_back(std::move(Dset));
  }
  std::reverse(rounds.begin(), rounds.end());
  return LevelPartition(top, std::move(rounds));
}

LevelPartition partition(const CappedComplement& A, Exec exec) { return partition_set(A.top, A.points, exec); }

LevelPartition apery_levels(const GoodSemigroup& S, const Point& w, int margin, Exec exec) {
  LevelPartition P = partition(apery_set(S, w, margin), exec);
  int sum = 0;
  for (int v : w) sum += v;
  if (P.size() != sum)
    throw ConsistencyError("Apery set w.r.t. " + w.str() + " has " + std::to_string(P.size()) + " levels, expected " +
                           std::to_string(sum));
  return P;
}

LevelPartition domination_partition_set(const Point& top, const PointSet& pts, Exec exec) {
  const RayBox rb(top);
  std::vector<Point> rest(pts.begin(), pts.end());
  std::vector<PointSet> rounds;
  while (!rest.empty()) {
    auto mask = kernels::maximal_mask(rest, rb, exec);
    std::vector<Point> B, next;
    for (std::size_t k = 0; k < rest.size(); ++k) (mask[k] ? B : next).push_back(rest[k]);
    rounds.emplace_back(std::move(B));
    rest.swap(next);
  }
  std::reverse(rounds.begin(), rounds.end());
  return LevelPartition(top, std::move(rounds));
}

LevelPartition domination_partition(const CappedComplement& A, Exec exec) {
  return domination_partition_set(A.top, A.points, exec);
}

int level_function(const GoodSemigroup& S, const LevelPartition& P, const Point& a) {
  if (!S.contains(a)) throw PreconditionError("level_function: " + a.str() + " not in S");
  if (int i = P.level_of_real(a)) return i;
  int best = 0;
  for (int i = 1; i <= P.size(); ++i)
    for (const auto& t : P.level(i))
      if (leq(t, a)) {
        best = i;
        break;
      }
  return best + 1;
}

PointSet realize(const PointSet& capped, const Point& top, const Point& window) {
  const RayBox rb(top);
  std::vector<Point> out;
  for_each_in_box(Point(top.dim()), window, [&](const Point& p) {
    if (capped.contains(rb.cap(p))) out.push_back(p);
    return true;
  });
  return PointSet(std::move(out));
}

std::string level_listing(const LevelPartition& P) {
  std::ostringstream os;
  for (int i = 1; i <= P.size(); ++i) {
    os << "A" << i << "=[";
    bool first = true;
    for (const auto& p : P.level(i)) {
      os << (first ? " [ " : ", [ ");
      first = false;
      for (int j = 0; j < p.dim(); ++j) {
        if (j) os << ", ";
        if (p[j] >= P.top()[j])
          os << "inf";
        else
          os << p[j];
      }
      os << " ]";
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace goodsg
