#pragma once

#include <vector>

#include "goodsg/semigroup.hpp"

namespace goodsg {

// Numerical semigroup (d = 1) kept by its minimal generators.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::vector<int> gens);
  static NumericalSemigroup from_good(const GoodSemigroup& S);

  const std::vector<int>& generators() const { return gens_; }
  int conductor() const { return c_; }
  int frobenius() const { return c_ - 1; }
  int multiplicity() const { return gens_.front(); }
  bool contains(long long n) const;
  std::vector<int> small_elements() const;
  // Ap(S, w) in ascending order; w must be a positive element.
  std::vector<int> apery(int w) const;
  std::vector<int> pseudo_frobenius() const;
  GoodSemigroup as_good() const;
  std::string str() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gens_ == b.gens_; }

 private:
  NumericalSemigroup(std::vector<char> mem, int conductor);
  std::vector<int> gens_;
  int c_ = 0;
  std::vector<char> mem_;  // membership on [0, c_]
};

}  // namespace goodsg
