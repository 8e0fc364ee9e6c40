#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "goodsg/io.hpp"
#include "goodsg/levels.hpp"
#include "goodsg/numerical.hpp"
#include "oracles.hpp"

namespace testsupport {

using namespace goodsg;

inline std::filesystem::path test_data(const std::string& name) {
  return std::filesystem::path(GOODSG_TEST_DATA_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Transcribed figure: "k: x,y x,y ..." per level, "E: ..." for marked
// elements. "infinity" coordinates are kept as -1.
struct Transcription {
  std::map<int, std::vector<std::vector<int>>> levels;
  std::vector<std::vector<int>> marked;
};

inline Transcription read_transcription(const std::string& name) {
  Transcription t;
  std::istringstream in(slurp(test_data(name)));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    std::string key = line.substr(0, colon);
    std::istringstream items(line.substr(colon + 1));
    std::string item;
    auto& dst = key == "E" ? t.marked : t.levels[std::stoi(key)];
    while (items >> item) {
      std::vector<int> p;
      std::istringstream cs(item);
      std::string c;
      while (std::getline(cs, c, ',')) p.push_back(c == "infinity" ? -1 : std::stoi(c));
      dst.push_back(p);
    }
  }
  return t;
}

inline Point to_point(const std::vector<int>& v) { return Point::from(v); }

// Real points of a transcribed level inside [0, window]; an "infinity"
// coordinate covers [inf_from_j, window_j].
inline PointSet realize_transcribed(const std::vector<std::vector<int>>& pts, const Point& inf_from,
                                    const Point& window) {
  std::vector<Point> out;
  const int d = window.dim();
  for (const auto& p : pts) {
    Point lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
      lo[j] = p[j] < 0 ? inf_from[j] : p[j];
      hi[j] = p[j] < 0 ? window[j] : p[j];
    }
    for_each_in_box(lo, hi, [&](const Point& x) {
      if (leq(x, window)) out.push_back(x);
      return true;
    });
  }
  return PointSet(std::move(out));
}

inline PointSet real_level(const LevelPartition& P, int i, const Point& window) {
  return realize(P.level(i), P.top(), window);
}

inline NumericalSemigroup numerical(std::vector<int> g) { return NumericalSemigroup::from_generators(std::move(g)); }

// Value semigroup of two monomial branches, as a GoodSemigroup read off the
// rank oracle on [0, bound].
inline GoodSemigroup value_semigroup(oracle::MonomialBranch b1, oracle::MonomialBranch b2, const Point& bound) {
  oracle::ValueSemigroupOracle vo({b1, b2}, {bound[0] + 2, bound[1] + 2});
  return GoodSemigroup::from_predicate(bound, [&](const Point& p) {
    if (!p.nonnegative()) return false;
    Point q(2);
    q[0] = std::min(p[0], bound[0]);
    q[1] = std::min(p[1], bound[1]);
    return vo.contains({q[0], q[1]});
  });
}

}  // namespace testsupport
