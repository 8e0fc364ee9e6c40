#pragma once
// Brute-force references used only by the tests. They share no code with the
// library beyond plain containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Elements of <gens> up to `bound` by dynamic programming.
inline std::vector<char> numerical_members(const std::vector<int>& gens, int bound) {
  std::vector<char> in(bound + 1, 0);
  in[0] = 1;
  for (int n = 1; n <= bound; ++n)
    for (int g : gens)
      if (g <= n && in[n - g]) {
        in[n] = 1;
        break;
      }
  return in;
}

inline int frobenius(const std::vector<int>& gens) {
  int bound = 1;
  for (int g : gens) bound *= g;
  auto in = numerical_members(gens, bound + gens.front());
  int f = -1;
  for (int n = 0; n < static_cast<int>(in.size()); ++n)
    if (!in[n]) f = n;
  return f;
}

// Smallest element in each residue class mod w.
inline std::vector<int> apery(const std::vector<int>& gens, int w) {
  const int F = frobenius(gens);
  auto in = numerical_members(gens, F + 2 * w + 1);
  std::vector<int> best(w, -1);
  for (int n = 0; n < static_cast<int>(in.size()); ++n)
    if (in[n] && best[n % w] < 0) best[n % w] = n;
  std::sort(best.begin(), best.end());
  return best;
}

// f not in S with f + s in S for every nonzero s in S.
inline std::vector<int> pseudo_frobenius(const std::vector<int>& gens) {
  const int F = frobenius(gens);
  auto in = numerical_members(gens, 2 * F + 2);
  std::vector<int> out;
  for (int f = 0; f <= F; ++f) {
    if (in[f]) continue;
    bool ok = true;
    for (int s = 1; s <= F + 1 && ok; ++s)
      if (in[s] && !in[f + s]) ok = false;
    if (ok) out.push_back(f);
  }
  return out;
}

// Value semigroup of a curve with branches x = t^a_b, y = t^b_b, computed
// from ranks of order conditions over F_p. (a1, a2) lies in S iff the space
// of f with v(f) >= alpha strictly shrinks when either coordinate grows.
struct MonomialBranch {
  int x, y;
};

class ValueSemigroupOracle {
 public:
  ValueSemigroupOracle(std::vector<MonomialBranch> branches, std::vector<int> order_bound)
      : br_(std::move(branches)), K_(std::move(order_bound)) {
    const int n = static_cast<int>(br_.size());
    for (int i = 0;; ++i) {
      bool any_i = false;
      for (int j = 0;; ++j) {
        std::vector<int> ord(n);
        bool live = false;
        for (int b = 0; b < n; ++b) {
          ord[b] = i * br_[b].x + j * br_[b].y;
          if (ord[b] < K_[b]) live = true;
        }
        if (!live) break;
        any_i = true;
        rows_.push_back(ord);
      }
      if (!any_i) break;
    }
  }

  bool contains(const std::vector<int>& alpha) {
    const int r0 = rank(alpha);
    for (std::size_t b = 0; b < alpha.size(); ++b) {
      auto up = alpha;
      ++up[b];
      if (rank(up) == r0) return false;
    }
    return true;
  }

 private:
  static constexpr std::uint64_t P = 1000000007ull;

  static std::uint64_t power(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= P; e; e >>= 1, b = b * b % P)
      if (e & 1) r = r * b % P;
    return r;
  }

  // Rank of the linear conditions "coefficient of t_b^k vanishes, k < alpha_b".
  int rank(const std::vector<int>& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    std::vector<std::pair<int, int>> cols;
    for (std::size_t b = 0; b < alpha.size(); ++b)
      for (int k = 0; k < alpha[b]; ++k) cols.emplace_back(static_cast<int>(b), k);
    std::vector<std::vector<std::uint64_t>> M;
    for (const auto& ord : rows_) {
      std::vector<std::uint64_t> row(cols.size(), 0);
      bool nz = false;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (ord[cols[c].first] == cols[c].second) {
          row[c] = 1;
          nz = true;
        }
      if (nz) M.push_back(std::move(row));
    }
    int r = 0;
    for (std::size_t c = 0; c < cols.size() && r < static_cast<int>(M.size()); ++c) {
      int piv = -1;
      for (int i = r; i < static_cast<int>(M.size()); ++i)
        if (M[i][c]) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(M[piv], M[r]);
      const std::uint64_t inv = power(M[r][c], P - 2);
      for (int i = 0; i < static_cast<int>(M.size()); ++i) {
        if (i == r || !M[i][c]) continue;
        const std::uint64_t f = M[i][c] * inv % P;
        for (std::size_t k = c; k < cols.size(); ++k) M[i][k] = (M[i][k] + P - f * M[r][k] % P) % P;
      }
      ++r;
    }
    memo_[alpha] = r;
    return r;
  }

  std::vector<MonomialBranch> br_;
  std::vector<int> K_;
  std::vector<std::vector<int>> rows_;
  std::map<std::vector<int>, int> memo_;
};

}  // namespace oracle
