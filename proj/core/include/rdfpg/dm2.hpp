#pragma once

#include <string_view>

#include "rdfpg/property_graph.hpp"
#include "rdfpg/rdf_graph.hpp"

namespace rdfpg {

namespace generic {
inline constexpr std::string_view kResource = "Resource";
inline constexpr std::string_view kLiteral = "Literal";
inline constexpr std::string_view kObjectProperty = "ObjectProperty";
inline constexpr std::string_view kDatatypeProperty = "DatatypeProperty";
inline constexpr std::string_view kIri = "iri";
inline constexpr std::string_view kType = "type";
inline constexpr std::string_view kValue = "value";
}  // namespace generic

/// The fixed schema that every schema-independent mapping targets:
///
///   Resource {iri: String, type: String}
///   Literal  {value: String, type: String}
///   ObjectProperty   {type: String} : Resource -> Resource
///   DatatypeProperty {type: String} : Resource -> Literal
PropertyGraphSchema generic_pg_schema();

/// Resources and literals become Resource and Literal nodes, edges become
/// ObjectProperty / DatatypeProperty edges. Class and datatype IRIs are kept
/// in "type" properties; all values are String-typed.
PropertyGraph im2(const RdfGraph& graph);

PgDatabase dm2(const RdfGraph& graph);

/// Inverse of im2. Throws SchemaViolation when the graph does not conform to
/// generic_pg_schema(), MissingRequiredProperty when an element lacks (or
/// repeats) one of its required keys.
RdfGraph im2_inv(const PropertyGraph& graph);

}  // namespace rdfpg
