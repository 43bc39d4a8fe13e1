#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rdfpg/triples.hpp"
#include "rdfpg/validation.hpp"
#include "rdfpg/vocabulary.hpp"

namespace rdfpg {

/// Node ids are shared by resource and literal nodes, so the two node sets are
/// disjoint by construction. Object and datatype edges share EdgeId likewise.
using RdfNodeId = std::uint64_t;
using RdfEdgeId = std::uint64_t;

struct ResourceNode {
  RdfNodeId id;
  Iri iri;    // alpha_I
  Iri klass;  // delta
};

struct LiteralNode {
  RdfNodeId id;
  std::string lexical;  // alpha_L
  Iri datatype;         // delta
};

struct RdfEdge {
  RdfEdgeId id;
  RdfNodeId source;
  RdfNodeId target;
  Iri property;  // delta
};

/// Formal RDF graph (N_I, N_L, E_O, E_D, alpha_I, alpha_L, beta_O, beta_D,
/// delta) with a total delta.
///
/// The add_* members are the only mutators and reject anything that would
/// break an invariant: one resource node per IRI, one literal node per
/// (lexical, datatype) pair, and edge endpoints of the right node kind.
class RdfGraph {
 public:
  RdfNodeId add_resource(Iri iri, Iri klass);
  RdfNodeId add_literal(std::string lexical, Iri datatype);
  RdfEdgeId add_object_edge(RdfNodeId source, Iri property, RdfNodeId target);
  RdfEdgeId add_datatype_edge(RdfNodeId source, Iri property, RdfNodeId target);

  const std::vector<ResourceNode>& resources() const { return resources_; }
  const std::vector<LiteralNode>& literals() const { return literals_; }
  const std::vector<RdfEdge>& object_edges() const { return object_edges_; }
  const std::vector<RdfEdge>& datatype_edges() const { return datatype_edges_; }

  const ResourceNode* find_resource(const Iri& iri) const;
  const LiteralNode* find_literal(const std::string& lexical, const Iri& datatype) const;
  const ResourceNode& resource(RdfNodeId id) const;
  const LiteralNode& literal(RdfNodeId id) const;
  bool is_resource(RdfNodeId id) const { return resource_index_.contains(id); }
  bool is_literal(RdfNodeId id) const { return literal_index_.contains(id); }

  bool empty() const {
    return resources_.empty() && literals_.empty() && object_edges_.empty() &&
           datatype_edges_.empty();
  }

 private:
  std::vector<ResourceNode> resources_;
  std::vector<LiteralNode> literals_;
  std::vector<RdfEdge> object_edges_;
  std::vector<RdfEdge> datatype_edges_;
  std::map<RdfNodeId, std::size_t> resource_index_;
  std::map<RdfNodeId, std::size_t> literal_index_;
  std::map<Iri, RdfNodeId> by_iri_;
  std::map<Literal, RdfNodeId> by_literal_;
  RdfNodeId next_node_ = 0;
  RdfEdgeId next_edge_ = 0;
};

struct ClassNode {
  RdfNodeId id;
  Iri iri;  // phi
};

struct PropertyEdge {
  RdfEdgeId id;
  Iri iri;  // phi
  RdfNodeId domain;
  RdfNodeId range;
};

/// Formal RDF graph schema (N_S, E_S, phi, varphi).
class RdfGraphSchema {
 public:
  /// Returns the existing node when the class is already present.
  RdfNodeId add_class(Iri iri);
  RdfEdgeId add_property(Iri iri, RdfNodeId domain, RdfNodeId range);

  const std::vector<ClassNode>& classes() const { return classes_; }
  const std::vector<PropertyEdge>& properties() const { return properties_; }
  const ClassNode* find_class(const Iri& iri) const;
  const ClassNode& class_node(RdfNodeId id) const;

  bool empty() const { return classes_.empty() && properties_.empty(); }

 private:
  std::vector<ClassNode> classes_;
  std::vector<PropertyEdge> properties_;
  std::map<Iri, RdfNodeId> by_iri_;
  std::map<RdfNodeId, std::size_t> index_;
  RdfNodeId next_node_ = 0;
  RdfEdgeId next_edge_ = 0;
};

/// A schema paired with an instance. Validity is reported separately; an
/// invalid pair is still a mappable database.
struct RdfDatabase {
  RdfGraphSchema schema;
  RdfGraph graph;
};

enum class TypeSelection {
  Strict,         // more than one rdf:type per subject is an error
  Lexicographic,  // keep the smallest class IRI
};

struct GraphBuildOptions {
  TypeSelection types = TypeSelection::Strict;
};

RdfGraph build_rdf_graph(const TripleSet& triples, const GraphBuildOptions& options = {});
RdfGraphSchema build_rdf_schema(const TripleSet& triples);
TripleSet complete_partial_schema(const TripleSet& triples);
ValidationReport validate_rdf(const RdfGraph& graph, const RdfGraphSchema& schema);

TripleSet rdf_graph_to_triples(const RdfGraph& graph);
TripleSet rdf_schema_to_triples(const RdfGraphSchema& schema);

/// Id-independent equality. Nodes compare by (IRI, class) and (lexical,
/// datatype); edges by (source key, property, target key) as multisets.
bool rdf_equal(const RdfGraph& a, const RdfGraph& b);
bool rdf_equal(const RdfGraphSchema& a, const RdfGraphSchema& b);
bool rdf_equal(const RdfDatabase& a, const RdfDatabase& b);

}  // namespace rdfpg
