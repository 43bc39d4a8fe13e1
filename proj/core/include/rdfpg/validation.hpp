#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rdfpg {

/// Validity conditions. R* apply to RDF graphs against RDF graph schemas,
/// P* to property graphs against PG schemas.
enum class Rule {
  R1,   // node class declared by the schema
  R2,   // object edge matches a property class and its endpoint classes
  R3,   // datatype edge matches a property class and its endpoint classes
  P1a,  // node label matches a node type
  P1b,  // node properties match property types of that node type
  P2a,  // edge label and endpoint labels match an edge type
  P2b,  // edge properties match property types of that edge type
};

std::string_view to_string(Rule rule);

struct Violation {
  Rule rule;
  std::uint64_t element;  // id of the offending node or edge
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(Rule rule) const;
  std::size_t count(Rule rule) const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// One line per violation, preceded by a summary line.
std::string format_report(const ValidationReport& report);

}  // namespace rdfpg
