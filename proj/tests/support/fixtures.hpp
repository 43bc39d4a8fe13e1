#pragma once

#include <string>

#include "rdfpg/property_graph.hpp"
#include "rdfpg/rdf_graph.hpp"
#include "rdfpg/triples.hpp"

namespace rdfpg::testing {

std::string data_path(const std::string& name);
std::string docs_path(const std::string& name);
std::string read_text(const std::string& path);

TripleSet example1_triples();
TripleSet example2_triples();
RdfDatabase example_database();

/// The property graph and PG schema of the running PG example,
/// built by hand.
PropertyGraph fig3_graph();
PropertyGraphSchema fig4_schema();

inline constexpr const char* kVoc = "http://www.example.org/voc/";
inline constexpr const char* kEx = "http://www.example.org/data/";

inline Iri voc(const std::string& local) { return Iri(kVoc + local); }
inline Iri ex(const std::string& local) { return Iri(kEx + local); }

}  // namespace rdfpg::testing
