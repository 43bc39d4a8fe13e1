#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "rdfpg/triples.hpp"

namespace rdfpg {

struct TurtleOptions {
  /// Keep `_:label` terms as BlankNode instead of failing. `[]` is always
  /// rejected.
  bool allow_blank_nodes = false;
  /// rdf, rdfs and xsd are bound before the first directive unless cleared.
  PrefixMap initial_prefixes = PrefixMap::standard();
  /// Receives non-fatal diagnostics such as prefix redefinitions.
  std::function<void(const std::string&)> on_warning;
};

/// Parses the supported Turtle subset. See docs/turtle-subset.md.
///
/// Errors carry ErrorCode::SyntaxError (message starts with "line:column"),
/// UnknownPrefix or BlankNodeUnsupported.
TripleSet parse_turtle(std::string_view text, const TurtleOptions& options = {});

/// Deterministic Turtle: prefixes sorted by name, subjects and predicates
/// sorted, `;` and `,` lists. Parsing the output yields the same triple set.
std::string serialize_turtle(const TripleSet& triples);

inline constexpr std::string_view kDefaultSkolemBase = "urn:skolem:";

/// Replaces every blank node with `base` + counter. Counters follow the
/// sorted order of the distinct labels starting at zero. Binds the prefix
/// "skolem" to `base` when it is free.
TripleSet skolemize(const TripleSet& triples, std::string_view base = kDefaultSkolemBase);

}  // namespace rdfpg
