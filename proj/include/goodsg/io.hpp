#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "goodsg/semigroup.hpp"

namespace goodsg::io {

// Semigroup file schema:
//   {"dim": d, "conductor": [...], "small_elements": [[...], ...]}
//   {"dim": 1, "generators": [...]}
//   {"product": ["a.json", "b.json"]}   paths relative to the file
GoodSemigroup parse_semigroup(const std::string& text, const std::filesystem::path& base_dir = {});
GoodSemigroup load_semigroup(const std::filesystem::path& file);
std::string emit_semigroup(const GoodSemigroup& S);

std::filesystem::path data_dir();
std::vector<std::string> fixture_names();
GoodSemigroup load_fixture(const std::string& name);

std::vector<int> parse_ints(const std::string& csv);
Point parse_point(const std::string& csv);

}  // namespace goodsg::io
