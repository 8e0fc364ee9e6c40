#pragma once

#include <cstddef>
#include <vector>

#include "goodsg/lattice.hpp"

namespace goodsg {

// Every data-parallel loop has a serial twin; tests compare the two.
enum class Exec { serial, parallel };

namespace kernels {

template <class Fn>
void for_range(std::size_t n, Fn&& fn, Exec exec) {
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long k = 0; k < nn; ++k) fn(static_cast<std::size_t>(k));
}

// fn(k, out) appends results for index k; output is concatenated in index
// order, so both paths produce identical sequences.
template <class T, class Fn>
std::vector<T> gather(std::size_t n, Fn&& fn, Exec exec) {
  std::vector<T> out;
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < n; ++k) fn(k, out);
    return out;
  }
  std::vector<std::vector<T>> buckets(n);
  for_range(n, [&](std::size_t k) { fn(k, buckets[k]); }, Exec::parallel);
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

template <class Pred>
std::vector<Point> filter_box(const Box& box, Pred&& pred, Exec exec) {
  return gather<Point>(
      box.size(),
      [&](std::size_t k, std::vector<Point>& out) {
        Point p = box.point(k);
        if (pred(static_cast<const Point&>(p))) out.push_back(p);
      },
      exec);
}

// mask[k] = 1 iff no other point of pts dominates pts[k] (ray-aware).
std::vector<char> maximal_mask(const std::vector<Point>& pts, const RayBox& rb, Exec exec);

// Plain << version for finite point sets.
std::vector<char> maximal_mask(const std::vector<Point>& pts, Exec exec);

}  // namespace kernels
}  // namespace goodsg
