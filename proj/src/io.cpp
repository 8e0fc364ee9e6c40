#include "goodsg/io.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "goodsg/numerical.hpp"

namespace goodsg::io {

using nlohmann::json;

namespace {

void line_col(const std::string& text, std::size_t byte, int& line, int& col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

Point as_point(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of integers");
  if (static_cast<int>(v.size()) != dim)
    throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  Point p(dim);
  for (int j = 0; j < dim; ++j) p[j] = as_int(v[j], where + "[" + std::to_string(j) + "]");
  return p;
}

void only_keys(const json& doc, std::initializer_list<const char*> keys) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw ParseError("unknown key \"" + it.key() + "\"");
  }
}

GoodSemigroup from_json(const json& doc, const std::filesystem::path& base_dir, int depth) {
  if (depth > 8) throw ParseError("product nesting too deep");
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (doc.contains("product")) {
    only_keys(doc, {"product"});
    const json& parts = doc["product"];
    if (!parts.is_array() || parts.size() < 2) throw ParseError("\"product\" must list at least two files");
    std::optional<GoodSemigroup> acc;
    for (const auto& f : parts) {
      if (!f.is_string()) throw ParseError("\"product\" entries must be file names");
      std::filesystem::path p = base_dir / f.get<std::string>();
      std::ifstream in(p);
      if (!in) throw ParseError("cannot open " + p.string());
      std::stringstream ss;
      ss << in.rdbuf();
      json sub;
      try {
        sub = json::parse(ss.str());
      } catch (const json::parse_error& e) {
        int line, col;
        line_col(ss.str(), e.byte, line, col);
        throw ParseError(p.string() + ": malformed JSON", line, col);
      }
      GoodSemigroup g = from_json(sub, p.parent_path(), depth + 1);
      acc = acc ? direct_product(*acc, g) : g;
    }
    return *acc;
  }
  if (!doc.contains("dim")) throw ParseError("missing key \"dim\"");
  const int dim = as_int(doc["dim"], "dim");
  if (dim < 1 || dim > kMaxDim) throw ParseError("dim out of range");
  if (doc.contains("generators")) {
    only_keys(doc, {"dim", "generators"});
    if (dim != 1) throw ParseError("\"generators\" requires dim 1");
    const json& g = doc["generators"];
    if (!g.is_array() || g.empty()) throw ParseError("\"generators\" must be a nonempty array");
    std::vector<int> gens;
    for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(as_int(g[i], "generators[" + std::to_string(i) + "]"));
    try {
      return NumericalSemigroup::from_generators(gens).as_good();
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  only_keys(doc, {"dim", "conductor", "small_elements"});
  if (!doc.contains("conductor")) throw ParseError("missing key \"conductor\"");
  if (!doc.contains("small_elements")) throw ParseError("missing key \"small_elements\"");
  Point c = as_point(doc["conductor"], dim, "conductor");
  const json& se = doc["small_elements"];
  if (!se.is_array()) throw ParseError("\"small_elements\" must be an array");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < se.size(); ++i)
    pts.push_back(as_point(se[i], dim, "small_elements[" + std::to_string(i) + "]"));
  try {
    return GoodSemigroup(c, PointSet(std::move(pts)));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

GoodSemigroup parse_semigroup(const std::string& text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line, col;
    line_col(text, e.byte, line, col);
    throw ParseError("malformed JSON", line, col);
  }
  return from_json(doc, base_dir, 0);
}

GoodSemigroup load_semigroup(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_semigroup(ss.str(), file.parent_path());
}

std::string emit_semigroup(const GoodSemigroup& S) {
  auto row = [](const Point& p) {
    std::string s = "[";
    for (int j = 0; j < p.dim(); ++j) s += (j ? ", " : "") + std::to_string(p[j]);
    return s + "]";
  };
  std::ostringstream os;
  os << "{\n  \"dim\": " << S.dim() << ",\n  \"conductor\": " << row(S.conductor()) << ",\n  \"small_elements\": [\n";
  const auto& pts = S.small_elements().points();
  for (std::size_t i = 0; i < pts.size(); ++i) os << "    " << row(pts[i]) << (i + 1 < pts.size() ? ",\n" : "\n");
  os << "  ]\n}\n";
  return os.str();
}

std::filesystem::path data_dir() {
  if (const char* d = std::getenv("GOODSG_DATA_DIR"); d && *d) return d;
  return GOODSG_DATA_DIR;
}

std::vector<std::string> fixture_names() {
  return {"n3_symmetric", "fig3_product", "fig4_planecurve", "fig4_blowup", "transversal_cusps",
          "num_2_3",      "num_3_5",      "num_4_7",         "num_3_5_7"};
}

GoodSemigroup load_fixture(const std::string& name) {
  return load_semigroup(data_dir() / "fixtures" / (name + ".json"));
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("not an integer list: \"" + csv + "\"");
    }
    if (pos != tok.size()) throw ParseError("not an integer list: \"" + csv + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

Point parse_point(const std::string& csv) {
  auto v = parse_ints(csv);
  if (v.size() > static_cast<std::size_t>(kMaxDim)) throw ParseError("too many coordinates");
  return Point::from(v);
}

}  // namespace goodsg::io
