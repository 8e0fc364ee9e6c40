#pragma once

#include <string>
#include <vector>

#include "goodsg/kernels.hpp"
#include "goodsg/levels.hpp"
#include "goodsg/products.hpp"
#include "goodsg/report.hpp"

namespace goodsg {

// A fixture under test: S, a good ideal E and the generic partition of S \ E.
struct ComplementContext {
  std::string name;
  GoodSemigroup S;
  GoodIdeal E;
  LevelPartition P;

  static ComplementContext make(std::string name, const GoodIdeal& E, int margin = 1);
  static ComplementContext apery(std::string name, const GoodSemigroup& S, const Point& w, int margin = 1);
};

// Subjects are real points of a window around the capped box; levels of real
// points are read through the cap. Reports are identical for both Exec modes.

// Level laws of the generic partition: the two level-comparison theorems
// (with consecutive elements), the in-between lemma, equal levels of Delta
// minima, the lower-neighbour and all-directions properties, and the basic
// domination laws.
std::vector<CheckReport> check_level_laws(const ComplementContext& ctx, Exec exec = Exec::parallel);

// Symmetric complements only (throws PreconditionError otherwise).
std::vector<CheckReport> check_symmetric_laws(const ComplementContext& ctx, Exec exec = Exec::parallel);

// Domination-implies-well-behaved, the d = 2 three-way agreement, single
// levels of Delta sets, and the shared-coordinate property of levels.
std::vector<CheckReport> check_wellbehaved_laws(const ComplementContext& ctx, Exec exec = Exec::parallel);

// The factor lemmas and the level-sum formula on a product.
std::vector<CheckReport> check_product_laws(const ProductContext& ctx, Exec exec = Exec::parallel);

// Minimum of Delta^S_k(p) among real points of [0, hi], if any.
std::optional<Point> delta_minimum(const GoodSemigroup& S, const Point& p, int k, const Point& hi);

bool all_ok(const std::vector<CheckReport>& reps);
std::size_t total_failures(const std::vector<CheckReport>& reps);

}  // namespace goodsg
