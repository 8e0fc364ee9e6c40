#include "goodsg/render.hpp"

#include <sstream>

namespace goodsg {

char level_glyph(int i) {
  if (i >= 1 && i <= 9) return static_cast<char>('0' + i);
  if (i >= 10 && i <= 35) return static_cast<char>('a' + i - 10);
  return '?';
}

namespace {

void require_d2(const GoodSemigroup& S) {
  if (S.dim() != 2) throw DimensionMismatch("plots need d = 2");
}

}  // namespace

std::string render_ascii(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P) {
  require_d2(S);
  const Point& T = P.top();
  const int lw = static_cast<int>(std::to_string(T[1]).size());
  std::ostringstream os;
  for (int y = T[1]; y >= 0; --y) {
    std::string label = std::to_string(y);
    os << std::string(lw - label.size(), ' ') << label << (y == T[1] ? " ^" : " |");
    for (int x = 0; x <= T[0]; ++x) {
      Point p{x, y};
      char ch = '.';
      if (int l = P.level_of(p))
        ch = level_glyph(l);
      else if (S.contains(p) && E.contains(p))
        ch = '#';
      os << ' ' << ch;
    }
    os << "\n";
  }
  os << std::string(lw, ' ') << " +";
  for (int x = 0; x <= T[0]; ++x) os << "--";
  os << ">\n" << std::string(lw + 2, ' ');
  for (int x = 0; x <= T[0]; ++x) os << ' ' << (x % 10);
  os << "\n";
  return os.str();
}

std::string render_svg(const GoodSemigroup& S, const GoodIdeal& E, const LevelPartition& P, const PlotOptions& opt) {
  require_d2(S);
  const Point& T = P.top();
  const int u = opt.cell, pad = 2 * u;
  const int w = (T[0] + 1) * u + 2 * pad, h = (T[1] + 1) * u + 2 * pad;
  auto X = [&](int x) { return pad + x * u + u / 2; };
  auto Y = [&](int y) { return h - pad - y * u - u / 2; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int x = 0; x <= T[0]; ++x)
    os << "<line x1=\"" << X(x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(T[1]) << "\"/>\n";
  for (int y = 0; y <= T[1]; ++y)
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(T[0]) << "\" y2=\"" << Y(y) << "\"/>\n";
  os << "</g>\n";
  // Axes with ticks at the given coordinates.
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << X(0) - u / 2 << "\" y1=\"" << Y(0) + u / 2 << "\" x2=\"" << X(T[0]) + u << "\" y2=\""
     << Y(0) + u / 2 << "\"/>\n";
  os << "<line x1=\"" << X(0) - u / 2 << "\" y1=\"" << Y(0) + u / 2 << "\" x2=\"" << X(0) - u / 2 << "\" y2=\""
     << Y(T[1]) - u << "\"/>\n";
  for (int t : opt.xticks)
    os << "<line x1=\"" << X(t) << "\" y1=\"" << Y(0) + u / 2 << "\" x2=\"" << X(t) << "\" y2=\"" << Y(0) + u
       << "\"/>\n";
  for (int t : opt.yticks)
    os << "<line x1=\"" << X(0) - u / 2 << "\" y1=\"" << Y(t) << "\" x2=\"" << X(0) - u << "\" y2=\"" << Y(t)
       << "\"/>\n";
  os << "</g>\n";
  os << "<g font-family=\"monospace\" font-size=\"" << u * 3 / 5 << "\" text-anchor=\"middle\">\n";
  for (int t : opt.xticks) os << "<text x=\"" << X(t) << "\" y=\"" << Y(0) + u + u * 3 / 5 << "\">" << t << "</text>\n";
  for (int t : opt.yticks)
    os << "<text x=\"" << X(0) - u - u / 2 << "\" y=\"" << Y(t) + u / 5 << "\">" << t << "</text>\n";
  for (int y = 0; y <= T[1]; ++y)
    for (int x = 0; x <= T[0]; ++x) {
      Point p{x, y};
      if (int l = P.level_of(p))
        os << "<text x=\"" << X(x) << "\" y=\"" << Y(y) + u / 5 << "\">" << level_glyph(l) << "</text>\n";
      else if (S.contains(p) && E.contains(p))
        os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"" << u / 5 << "\" fill=\"black\"/>\n";
    }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace goodsg
