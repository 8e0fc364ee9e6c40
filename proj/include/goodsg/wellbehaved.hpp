#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodsg/levels.hpp"
#include "goodsg/report.hpp"

namespace goodsg {

// Points alpha of S \ E (real, inside [0, T]) that are a complete infimum of
// witnesses beta_j in Delta~^S_{G_j}(alpha) with every such Delta~ inside A.
std::vector<Point> well_behaved_violations(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P,
                                           Exec exec = Exec::parallel);
bool is_well_behaved(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P,
                     Exec exec = Exec::parallel);

struct D2Equivalences {
  bool well_behaved = false;
  bool same_level_meets = false;
  bool dominated_by_next = false;
  bool agree() const { return well_behaved == same_level_meets && same_level_meets == dominated_by_next; }
};

// The three conditions evaluated independently; throws ConsistencyError if
// they disagree.
D2Equivalences d2_equivalences(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P);
// Same, without the agreement check.
D2Equivalences d2_conditions(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P);

// The level containing Delta^S_F(w), nullopt if it spans several levels.
// Throws PreconditionError if the set is empty or meets E.
std::optional<int> single_line_level(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P,
                                     const Point& w, const IndexSet& F);

// Columns Delta_1^S(u_i, -1) lie in A_i and A_i stays left of u_i; same for rows.
CheckReport projection_level_bound(const GoodSemigroup& S, const Point& w, const LevelPartition& P);

// Gamma(alpha1) ∩ S lies in A_i whenever alpha1 is in level i of the
// projected Apery set on the axes I1.
CheckReport gamma_line_levels(const GoodSemigroup& S, const Point& w, const LevelPartition& P, const IndexSet& I1);

struct LevelTag {
  int clause = 0;  // 1..5 for i..v, 0 when unclassified
  int k = -1;      // theta index for ii and iii
  std::string str() const;
};

struct LevelStructure {
  int level = 0;
  std::optional<Point> theta0;      // vertical ray boundary
  std::vector<Point> absolutes;     // theta^(1)..theta^(r)
  std::optional<Point> theta_last;  // horizontal ray boundary
  std::vector<Point> elements;
  std::vector<LevelTag> tags;
  std::vector<Point> unclassified;
  std::vector<Point> printed_reading_only;  // satisfy a clause only as printed
  std::vector<Point> no_shared_coordinate;

  int r() const { return static_cast<int>(absolutes.size()); }
  std::optional<Point> theta(int k) const;
  std::string str() const;
};

// Tag elements against the given thetas (d = 2).
LevelStructure classify_points(const std::vector<Point>& elements, const std::optional<Point>& theta0,
                               const std::vector<Point>& absolutes, const std::optional<Point>& theta_last);

// Computes absolutes and boundary elements of A_i, then tags. Explicit
// boundary elements override the computed ones. Throws ConsistencyError if
// some element gets no tag.
LevelStructure classify_level(const GoodSemigroup& S, const LevelPartition& P, int i,
                              const std::optional<Point>& theta0 = std::nullopt,
                              const std::optional<Point>& theta_last = std::nullopt);

}  // namespace goodsg
