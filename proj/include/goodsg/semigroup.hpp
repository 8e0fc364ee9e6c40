#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "goodsg/kernels.hpp"
#include "goodsg/lattice.hpp"

namespace goodsg {

// S represented by its conductor c and Small(S) = S ∩ [0, c]; membership of
// any point is membership of its cap at c.
class GoodSemigroup {
 public:
  GoodSemigroup(Point conductor, PointSet small_elements);

  // Small elements of {p in [0, bound] : in(p)}, conductor lowered while the
  // predicate stays full above it. `in` must already be constant past bound.
  static GoodSemigroup from_predicate(const Point& bound, const std::function<bool(const Point&)>& in);

  int dim() const { return c_.dim(); }
  const Point& conductor() const { return c_; }
  Point gamma() const { return c_ - Point(dim(), 1); }
  const PointSet& small_elements() const { return small_; }
  const Point& multiplicity() const { return e_; }
  bool is_local() const { return local_; }

  bool contains(const Point& a) const;
  Point cap(const Point& a) const;

  friend bool operator==(const GoodSemigroup& a, const GoodSemigroup& b) {
    return a.c_ == b.c_ && a.small_ == b.small_;
  }

 private:
  Point c_;
  PointSet small_;
  Box box_;
  std::vector<std::uint8_t> dense_;
  Point e_;
  bool local_ = true;
};

struct Violation {
  enum class Kind { missing_zero, meet, additive, g2, conductor, outside_parent };
  Kind kind;
  std::vector<Point> witnesses;
  std::string str() const;
};

struct ValidationReport {
  Point box;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(Violation::Kind k) const;
  std::string str(std::size_t max_lines = 20) const;
};

// Exhaustive axiom check on [0, c + e + margin].
ValidationReport validate(const GoodSemigroup& S, int margin = 1, Exec exec = Exec::parallel);

// True when c - unit_i + N^d ⊆ S for some i, i.e. the stored conductor is not
// the minimum. Works for any predicate constant beyond c.
bool conductor_reducible(const Point& c, const std::function<bool(const Point&)>& in, int i);

// Delta^S_F(p) nonempty, p in Z^d, decided exactly through capping.
bool delta_nonempty(const GoodSemigroup& S, const Point& p, const IndexSet& F);
bool delta_union_empty(const GoodSemigroup& S, const Point& p);

bool is_absolute(const GoodSemigroup& S, const Point& a);
PointSet absolute_elements(const GoodSemigroup& S, const Point& box);

bool is_pseudo_frobenius(const GoodSemigroup& S, const Point& a);
PointSet pseudo_frobenius(const GoodSemigroup& S, const Point& box);

// Membership in Delta(p) over N^d (no ambient set).
bool in_full_delta(const Point& b, const Point& p);

bool is_symmetric(const GoodSemigroup& S, int band = 1);
bool is_almost_symmetric(const GoodSemigroup& S);

GoodSemigroup direct_product(const GoodSemigroup& S1, const GoodSemigroup& S2);
GoodSemigroup projection(const GoodSemigroup& S, const IndexSet& axes);

}  // namespace goodsg
