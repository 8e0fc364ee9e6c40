#pragma once

#include <string>
#include <vector>

#include "goodsg/levels.hpp"

namespace goodsg {

// "1".."9" then "a".."z"; '?' past 35 levels.
char level_glyph(int i);

struct PlotOptions {
  std::vector<int> xticks, yticks;  // Apery coordinates of the projections
  int cell = 20;                    // pixels per lattice unit
};

// d = 2 pictures of the capped box [0, T]: level glyphs on A, filled marks on
// E, nothing off S. The last row and column stand for the rays.
std::string render_ascii(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P);
std::string render_svg(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P,
                       const PlotOptions& opt = {});

}  // namespace goodsg
