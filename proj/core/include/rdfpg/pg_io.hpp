#pragma once

#include <string>
#include <string_view>

#include "rdfpg/property_graph.hpp"

namespace rdfpg {

/// Canonical JSON for a property graph (docs/pg-document.schema.json).
///
/// Ids are reassigned in canonical order, so graphs that are pg_equal
/// serialize to identical bytes.
std::string serialize_pg(const PropertyGraph& graph);

/// Throws FormatError (message names the JSON path) or DanglingEdgeEndpoint.
PropertyGraph parse_pg(std::string_view text);

/// Canonical JSON for a PG schema (docs/pg-schema-document.schema.json).
std::string serialize_pg_schema(const PropertyGraphSchema& schema);
PropertyGraphSchema parse_pg_schema(std::string_view text);

/// openCypher import script: one CREATE per node, then one MATCH ... CREATE
/// per edge, then a cleanup of the temporary `_pgid` key. Empty graphs give
/// an empty script. See docs/cypher-export.md.
std::string export_import_script(const PropertyGraph& graph);

}  // namespace rdfpg
