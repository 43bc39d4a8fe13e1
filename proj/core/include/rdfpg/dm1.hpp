#pragma once

#include <string_view>

#include "rdfpg/property_graph.hpp"
#include "rdfpg/rdf_graph.hpp"

namespace rdfpg {

/// Property key that carries a resource IRI under the schema-dependent
/// mapping. RDF property IRIs are absolute, so they can never equal it.
inline constexpr std::string_view kIriKey = "iri";

/// Schema-dependent schema mapping: user classes become node types,
/// properties with a datatype range become property types of the domain's
/// node type, and the remaining properties become edge types.
///
/// Throws MissingEndpointType when a property's domain (or non-datatype
/// range) has no node type.
PropertyGraphSchema sm1(const RdfGraphSchema& schema);

/// Schema-dependent instance mapping: resources become nodes carrying an
/// "iri" property, datatype edges become node properties, object edges
/// become edges.
///
/// Throws DuplicatePropertyLabel when a resource has two datatype edges with
/// the same property.
PropertyGraph im1(const RdfGraph& graph);

/// Validation settings for PGs produced by im1: the "iri" key is accepted on
/// every node although sm1 declares no property type for it.
PgValidationOptions dm1_validation_options();

struct Dm1Result {
  PgDatabase database;
  ValidationReport source_report;  // instance against the RDF schema
  ValidationReport target_report;  // mapped instance against the mapped schema
};

/// Both halves of the schema-dependent mapping plus validity of source and
/// target. The mapping runs even when the source is invalid.
Dm1Result dm1(const RdfDatabase& database);

/// Inverse schema mapping. Datatypes used by property types become classes,
/// node types become classes, edge types and property types become property
/// classes. Property types attached to edge types have no RDF counterpart
/// and are ignored.
RdfGraphSchema sm1_inv(const PropertyGraphSchema& schema);

/// Inverse instance mapping. Requires exactly one "iri" property per node and
/// IRI-valued labels; throws MissingIriProperty, NonIriLabel or
/// UnsupportedEdgeProperty otherwise.
RdfGraph im1_inv(const PropertyGraph& graph);

RdfDatabase dm1_inv(const PgDatabase& database);

}  // namespace rdfpg
