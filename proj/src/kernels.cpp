#include "goodsg/kernels.hpp"

namespace goodsg::kernels {

std::vector<char> maximal_mask(const std::vector<Point>& pts, const RayBox& rb, Exec exec) {
  std::vector<char> mask(pts.size(), 1);
  for_range(
      pts.size(),
      [&](std::size_t k) {
        for (std::size_t j = 0; j < pts.size(); ++j)
          if (j != k && rb.dominates(pts[k], pts[j])) {
            mask[k] = 0;
            return;
          }
      },
      exec);
  return mask;
}

std::vector<char> maximal_mask(const std::vector<Point>& pts, Exec exec) {
  std::vector<char> mask(pts.size(), 1);
  for_range(
      pts.size(),
      [&](std::size_t k) {
        for (std::size_t j = 0; j < pts.size(); ++j)
          if (j != k && dominates(pts[k], pts[j])) {
            mask[k] = 0;
            return;
          }
      },
      exec);
  return mask;
}

}  // namespace goodsg::kernels
