#pragma once

#include <memory>

#include "goodsg/semigroup.hpp"

namespace goodsg {

// Good ideal E ⊆ S, stored like S: conductor c_E and E ∩ [0, c_E].
class GoodIdeal {
 public:
  GoodIdeal(GoodSemigroup parent, Point conductor, PointSet small_elements);

  const GoodSemigroup& parent() const { return *parent_; }
  const Point& conductor() const { return c_; }
  Point gamma() const { return c_ - Point(c_.dim(), 1); }
  const PointSet& small_elements() const { return small_; }
  bool contains(const Point& a) const;

 private:
  std::shared_ptr<const GoodSemigroup> parent_;
  Point c_;
  PointSet small_;
  Box box_;
  std::vector<std::uint8_t> dense_;
};

GoodIdeal principal_ideal(const GoodSemigroup& S, const Point& w);
GoodIdeal product_ideal(const GoodIdeal& E1, const GoodIdeal& E2);

// E ⊆ S, E + S ⊆ E, (G1), (G2) and conductor minimality on [0, c_E + e + margin].
ValidationReport validate_ideal(const GoodIdeal& E, int margin = 1, Exec exec = Exec::parallel);

// A = S \ E capped to [0, T], T = c_E + margin. A coordinate equal to T_i
// marks a ray.
struct CappedComplement {
  Point top;
  Point conductor_E;
  PointSet points;
  RayBox rays() const { return RayBox(top); }
};

CappedComplement complement(const GoodSemigroup& S, const GoodIdeal& E, int margin = 1);
CappedComplement apery_set(const GoodSemigroup& S, const Point& w, int margin = 1);

// Box margin from GOODSG_BOX_MARGIN, default 1.
int default_margin();

}  // namespace goodsg
