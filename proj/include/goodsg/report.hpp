#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace goodsg {

// Named check with a count of evaluated instances and every failure found.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  void merge(const CheckReport& o) {
    checked += o.checked;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  std::string str(std::size_t max_lines = 10) const {
    std::ostringstream os;
    os << (ok() ? "PASS" : "FAIL") << "  " << name << " (" << checked << " checks";
    if (!ok()) os << ", " << failures.size() << " failures";
    os << ")\n";
    for (std::size_t i = 0; i < failures.size() && i < max_lines; ++i) os << "      " << failures[i] << "\n";
    return os.str();
  }
};

}  // namespace goodsg
