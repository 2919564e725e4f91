#ifndef LPWR_REPORT_HPP
#define LPWR_REPORT_HPP

#include <string>
#include <vector>

namespace lpwr {

/// Outcome of a property probe: a pass flag plus deterministic detail lines.
struct Report {
  bool pass = true;
  std::vector<std::string> lines;

  void note(std::string line) { lines.push_back(std::move(line)); }
  void fail(std::string line) {
    pass = false;
    lines.push_back("FAIL: " + std::move(line));
  }
  void merge(const Report& o) {
    pass = pass && o.pass;
    lines.insert(lines.end(), o.lines.begin(), o.lines.end());
  }
  std::string str() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    out += pass ? "PASS" : "FAIL";
    return out;
  }
};

} // namespace lpwr

#endif
