#include "rdfpg/validation.hpp"

#include <algorithm>

namespace rdfpg {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::P1a: return "P1a";
    case Rule::P1b: return "P1b";
    case Rule::P2a: return "P2a";
    case Rule::P2b: return "P2b";
  }
  return "?";
}

bool ValidationReport::has(Rule rule) const { return count(rule) > 0; }

std::size_t ValidationReport::count(Rule rule) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [rule](const Violation& v) { return v.rule == rule; }));
}

std::string format_report(const ValidationReport& report) {
  std::string out = report.valid()
                        ? "valid\n"
                        : "invalid (" + std::to_string(report.violations.size()) +
                              (report.violations.size() == 1 ? " violation)\n" : " violations)\n");
  for (const auto& v : report.violations) {
    out += "  [";
    out += to_string(v.rule);
    out += "] element " + std::to_string(v.element) + ": " + v.message + "\n";
  }
  return out;
}

}  // namespace rdfpg
