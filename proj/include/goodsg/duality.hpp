#pragma once

#include <functional>
#include <string>
#include <vector>

#include "goodsg/levels.hpp"

namespace goodsg {

using Membership = std::function<bool(const Point&)>;

struct DualPartition {
  Point anchor;
  Point top;
  std::vector<PointSet> duals;  // A_1'..A_N', capped on the same box as the levels
};

// A_i' = (union over w in A_i of Delta^amb(anchor - w)) minus earlier duals.
// `amb` must be constant past the box; ray points of A_i stand for all their
// real representatives.
DualPartition dual_levels(const LevelPartition& P, const Point& anchor, const Membership& amb);
DualPartition dual_levels(const GoodSemigroup& S, const LevelPartition& P, const Point& anchor);

bool is_symmetric_complement(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P);

struct DualityReport {
  bool precondition = true;  // symmetric complement / almost symmetric
  std::string precondition_note;
  std::vector<std::pair<int, int>> pairs;  // (i, N-i+1)
  std::vector<bool> pass;
  std::vector<std::string> mismatch;  // per index, empty when it passes
  bool ok() const;
  std::string str() const;
};

// A_i' = A_{N-i+1} for every i, anchor gamma_E.
DualityReport check_duality(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P);

struct ZWSets {
  Point top;
  PointSet Z;
  PointSet W;
};

ZWSets build_Z_W(const GoodSemigroup& S, int margin = 1);

struct AlmostSymmetricReport {
  bool almost_symmetric = false;
  LevelPartition Zlevels, Wlevels;
  DualityReport z, w;
  bool ok() const { return almost_symmetric && z.ok() && w.ok(); }
  std::string str() const;
};

// Z partitioned by the generic level machinery, duals with anchor gamma in
// the ambient S ∪ PF(S); W with anchor gamma + e in S.
AlmostSymmetricReport check_almost_symmetric_duality(const GoodSemigroup& S, int margin = 1);

}  // namespace goodsg
