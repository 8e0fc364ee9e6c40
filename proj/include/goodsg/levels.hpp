#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "goodsg/ideal.hpp"

namespace goodsg {

struct InfimumWitness {
  std::vector<IndexSet> directions;
  std::vector<Point> witnesses;
};

// Given the directions F with Delta_F(a) nonempty, pick F_1..F_r (r >= 2)
// with pairwise unions I and empty intersection. Equivalently the
// complements of the F_k partition I into nonempty blocks.
std::optional<std::vector<IndexSet>> infimum_directions(int dim, const std::vector<IndexSet>& available);

std::optional<InfimumWitness> complete_infimum(const PointSet& A, const Point& a);
// Ray-aware version on a capped box.
std::optional<InfimumWitness> complete_infimum(const PointSet& A, const Point& a, const RayBox& rb);

// Levels A_1..A_N of a capped set, 1-based access.
class LevelPartition {
 public:
  LevelPartition() = default;
  LevelPartition(Point top, std::vector<PointSet> levels);

  const Point& top() const { return top_; }
  RayBox rays() const { return RayBox(top_); }
  int size() const { return static_cast<int>(levels_.size()); }
  const PointSet& level(int i) const { return levels_.at(i - 1); }
  const std::vector<PointSet>& levels() const { return levels_; }
  // Level of a capped point, 0 if absent.
  int level_of(const Point& capped) const;
  // Level of a point of N^d read through the cap; 0 if absent.
  int level_of_real(const Point& p) const;
  PointSet all_points() const;

  friend bool operator==(const LevelPartition& a, const LevelPartition& b) {
    return a.top_ == b.top_ && a.levels_ == b.levels_;
  }

 private:
  Point top_;
  std::vector<PointSet> levels_;
  std::unordered_map<Point, int, PointHash> index_;
};

LevelPartition partition(const CappedComplement& A, Exec exec = Exec::serial);
LevelPartition partition_set(const Point& top, const PointSet& pts, Exec exec = Exec::serial);
LevelPartition apery_levels(const GoodSemigroup& S, const Point& w, int margin = 1, Exec exec = Exec::serial);

LevelPartition domination_partition(const CappedComplement& A, Exec exec = Exec::serial);
LevelPartition domination_partition_set(const Point& top, const PointSet& pts, Exec exec = Exec::serial);

// lambda(a) for a in S.
int level_function(const GoodSemigroup& S, const LevelPartition& P, const Point& a);

// Real points of N^d inside [0, window] represented by a capped set.
PointSet realize(const PointSet& capped, const Point& top, const Point& window);

// One line per level, rays printed as "inf".
std::string level_listing(const LevelPartition& P);

}  // namespace goodsg
