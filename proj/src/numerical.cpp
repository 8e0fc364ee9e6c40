#include "goodsg/numerical.hpp"

#include <numeric>

namespace goodsg {

NumericalSemigroup::NumericalSemigroup(std::vector<char> mem, int conductor) : c_(conductor), mem_(std::move(mem)) {
  mem_.resize(c_ + 1);
  // Minimal generators: nonzero elements below c + m that are not a sum of
  // two nonzero elements. Anything past c + m is such a sum.
  int m = 0;
  for (int n = 1; n <= c_ + 1; ++n)
    if (contains(n)) {
      m = n;
      break;
    }
  for (int n = 1; n <= c_ + m; ++n) {
    if (!contains(n)) continue;
    bool decomposable = false;
    for (int a = 1; a <= n / 2 && !decomposable; ++a) decomposable = contains(a) && contains(n - a);
    if (!decomposable) gens_.push_back(n);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> gens) {
  if (gens.empty()) throw PreconditionError("numerical semigroup needs generators");
  int g = 0;
  for (int x : gens) {
    if (x <= 0) throw PreconditionError("generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw PreconditionError("generators are not coprime (gcd " + std::to_string(g) + ")");
  std::sort(gens.begin(), gens.end());
  // Frobenius number is below g_1 * g_n.
  const long long bound = static_cast<long long>(gens.front()) * gens.back() + gens.back();
  if (bound > 50'000'000) throw PreconditionError("generators too large");
  std::vector<char> mem(bound + 1, 0);
  mem[0] = 1;
  for (long long n = 1; n <= bound; ++n)
    for (int x : gens)
      if (x <= n && mem[n - x]) {
        mem[n] = 1;
        break;
      }
  int c = 0;
  for (long long n = bound; n >= 0; --n)
    if (!mem[n]) {
      c = static_cast<int>(n) + 1;
      break;
    }
  return NumericalSemigroup(std::move(mem), c);
}

NumericalSemigroup NumericalSemigroup::from_good(const GoodSemigroup& S) {
  if (S.dim() != 1) throw DimensionMismatch("numerical semigroup needs d = 1");
  const int c = S.conductor()[0];
  std::vector<char> mem(c + 1, 0);
  for (const auto& p : S.small_elements()) mem[p[0]] = 1;
  if (!mem[0]) throw PreconditionError("0 missing from semigroup");
  return NumericalSemigroup(std::move(mem), c);
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) return false;
  if (n >= c_) return true;
  return mem_[n] != 0;
}

std::vector<int> NumericalSemigroup::small_elements() const {
  std::vector<int> out;
  for (int n = 0; n <= c_; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

std::vector<int> NumericalSemigroup::apery(int w) const {
  if (w <= 0 || !contains(w)) throw PreconditionError("Apery set needs a positive element");
  std::vector<int> out;
  for (int n = 0; static_cast<int>(out.size()) < w; ++n)
    if (contains(n) && !contains(n - w)) out.push_back(n);
  return out;
}

std::vector<int> NumericalSemigroup::pseudo_frobenius() const {
  std::vector<int> out;
  for (int n = 0; n < c_; ++n) {
    if (contains(n)) continue;
    bool pf = true;
    for (int g : gens_) pf = pf && contains(n + g);
    if (pf) out.push_back(n);
  }
  return out;
}

GoodSemigroup NumericalSemigroup::as_good() const {
  std::vector<Point> small;
  for (int n : small_elements()) small.push_back(Point{n});
  return GoodSemigroup(Point{c_}, PointSet(std::move(small)));
}

std::string NumericalSemigroup::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + std::to_string(gens_[i]);
  return s + ">";
}

}  // namespace goodsg
