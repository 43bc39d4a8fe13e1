#pragma once

#include <cstdint>
#include <vector>

#include "rdfpg/property_graph.hpp"
#include "rdfpg/rdf_graph.hpp"
#include "rdfpg/triples.hpp"

namespace rdfpg {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t max_classes = 10;
  std::size_t max_properties = 15;
  std::size_t max_resources = 30;
  std::size_t max_triples = 100;
  /// Datatypes that property ranges and literals draw from.
  std::vector<Iri> datatype_pool = default_datatype_pool();

  static std::vector<Iri> default_datatype_pool();
};

/// Random valid RDF database. The schema is produced by running generated
/// schema triples through build_rdf_schema, the instance by running instance
/// triples through build_rdf_graph, and the instance conforms to the schema by
/// construction. Instances stay inside the schema-dependent mapping's domain:
/// one class per resource, at most one value per datatype property and
/// subject. A pure function of the config.
RdfDatabase gen_rdf_database(const GeneratorConfig& config);

/// Random RDF graph with no schema. Unlike gen_rdf_database this covers
/// multi-valued properties, untyped resources, the same lexical form under
/// several datatypes and literals nobody points at.
RdfGraph gen_rdf_graph(const GeneratorConfig& config);

/// Random triple set with a random prefix map, for I/O round-trips.
TripleSet gen_triple_set(const GeneratorConfig& config);

/// Random property graph with arbitrary labels, keys and typed values.
PropertyGraph gen_property_graph(const GeneratorConfig& config);

/// Random PG schema (unique node type labels, disjoint Psi sets).
PropertyGraphSchema gen_pg_schema(const GeneratorConfig& config);

/// Seed for case `index` of a batch started from `seed` (splitmix64).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace rdfpg
