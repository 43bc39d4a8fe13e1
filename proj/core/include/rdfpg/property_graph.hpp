#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdfpg/validation.hpp"
#include "rdfpg/vocabulary.hpp"

namespace rdfpg {

enum class PgTypeKind { String, Integer, Int, Decimal, Double, Boolean, Date, DateTime, Custom };

/// A property-graph datatype. Custom carries the RDF datatype IRI it stands
/// for, which keeps the datatype correspondence invertible.
class PgDatatype {
 public:
  PgDatatype() = default;
  PgDatatype(PgTypeKind kind) : kind_(kind) {}  // NOLINT(google-explicit-constructor)
  static PgDatatype custom(Iri iri);

  PgTypeKind kind() const noexcept { return kind_; }
  bool is_custom() const noexcept { return kind_ == PgTypeKind::Custom; }
  const Iri& custom_iri() const noexcept { return custom_; }

  /// "String", "Integer", ... or "<iri>" for Custom.
  std::string name() const;
  static std::optional<PgDatatype> from_name(std::string_view name);

  friend auto operator<=>(const PgDatatype&, const PgDatatype&) = default;
  friend bool operator==(const PgDatatype&, const PgDatatype&) = default;

 private:
  PgTypeKind kind_ = PgTypeKind::String;
  Iri custom_;
};

/// A value is its lexical form plus an explicit datatype; "46" as Integer and
/// "46" as String are different values.
struct PgValue {
  std::string lexical;
  PgDatatype datatype;

  friend auto operator<=>(const PgValue&, const PgValue&) = default;
  friend bool operator==(const PgValue&, const PgValue&) = default;
};

inline PgDatatype type_of_value(const PgValue& value) { return value.datatype; }

struct NodeId {
  std::uint64_t value;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};
struct EdgeId {
  std::uint64_t value;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};
struct PropertyId {
  std::uint64_t value;
  friend auto operator<=>(const PropertyId&, const PropertyId&) = default;
};

struct Property {
  PropertyId id;
  std::string label;
  PgValue value;
};

struct PgNode {
  NodeId id;
  std::string label;
  std::vector<PropertyId> properties;
};

struct PgEdge {
  EdgeId id;
  std::string label;
  NodeId source;
  NodeId target;
  std::vector<PropertyId> properties;
};

/// Property graph (N, E, P, Gamma, Upsilon, Sigma, Delta).
///
/// Nodes, edges and properties have distinct id types, so the three sets are
/// disjoint. Properties are created attached to exactly one owner, which rules
/// out orphans and shared properties.
class PropertyGraph {
 public:
  NodeId add_node(std::string label);
  EdgeId add_edge(std::string label, NodeId source, NodeId target);
  PropertyId add_property(NodeId owner, std::string label, PgValue value);
  PropertyId add_property(EdgeId owner, std::string label, PgValue value);

  const std::vector<PgNode>& nodes() const { return nodes_; }
  const std::vector<PgEdge>& edges() const { return edges_; }
  const std::vector<Property>& properties() const { return properties_; }

  const PgNode& node(NodeId id) const;
  const PgEdge& edge(EdgeId id) const;
  const Property& property(PropertyId id) const;
  bool has_node(NodeId id) const { return node_index_.contains(id.value); }

  bool empty() const { return nodes_.empty() && edges_.empty(); }

 private:
  std::vector<PgNode> nodes_;
  std::vector<PgEdge> edges_;
  std::vector<Property> properties_;
  std::map<std::uint64_t, std::size_t> node_index_;
  std::map<std::uint64_t, std::size_t> edge_index_;
  std::uint64_t next_node_ = 0;
  std::uint64_t next_edge_ = 0;
  std::uint64_t next_property_ = 0;
};

struct NodeTypeId {
  std::uint64_t value;
  friend auto operator<=>(const NodeTypeId&, const NodeTypeId&) = default;
};
struct EdgeTypeId {
  std::uint64_t value;
  friend auto operator<=>(const EdgeTypeId&, const EdgeTypeId&) = default;
};
struct PropertyTypeId {
  std::uint64_t value;
  friend auto operator<=>(const PropertyTypeId&, const PropertyTypeId&) = default;
};

struct PropertyType {
  PropertyTypeId id;
  std::string label;
  PgDatatype datatype;
};

struct NodeType {
  NodeTypeId id;
  std::string label;
  std::vector<PropertyTypeId> properties;
};

struct EdgeType {
  EdgeTypeId id;
  std::string label;
  NodeTypeId source;
  NodeTypeId target;
  std::vector<PropertyTypeId> properties;
};

/// Property graph schema (N_S, E_S, P_S, Theta, Pi, Phi, Psi).
///
/// Node type labels are unique. A property type belongs to at most one owner.
class PropertyGraphSchema {
 public:
  NodeTypeId add_node_type(std::string label);
  EdgeTypeId add_edge_type(std::string label, NodeTypeId source, NodeTypeId target);
  PropertyTypeId add_property_type(std::string label, PgDatatype datatype);
  void attach(NodeTypeId owner, PropertyTypeId property);
  void attach(EdgeTypeId owner, PropertyTypeId property);

  /// Shorthand for add_property_type + attach.
  PropertyTypeId add_property_type(NodeTypeId owner, std::string label, PgDatatype datatype);
  PropertyTypeId add_property_type(EdgeTypeId owner, std::string label, PgDatatype datatype);

  const std::vector<NodeType>& node_types() const { return node_types_; }
  const std::vector<EdgeType>& edge_types() const { return edge_types_; }
  const std::vector<PropertyType>& property_types() const { return property_types_; }

  const NodeType& node_type(NodeTypeId id) const;
  const EdgeType& edge_type(EdgeTypeId id) const;
  const PropertyType& property_type(PropertyTypeId id) const;
  const NodeType* find_node_type(std::string_view label) const;
  bool is_attached(PropertyTypeId id) const { return owned_.contains(id.value); }

  bool empty() const {
    return node_types_.empty() && edge_types_.empty() && property_types_.empty();
  }

 private:
  std::vector<NodeType> node_types_;
  std::vector<EdgeType> edge_types_;
  std::vector<PropertyType> property_types_;
  std::map<std::uint64_t, std::size_t> node_type_index_;
  std::map<std::uint64_t, std::size_t> edge_type_index_;
  std::map<std::uint64_t, std::size_t> property_type_index_;
  std::map<std::string, std::uint64_t, std::less<>> node_type_by_label_;
  std::map<std::uint64_t, bool> owned_;
  std::uint64_t next_node_type_ = 0;
  std::uint64_t next_edge_type_ = 0;
  std::uint64_t next_property_type_ = 0;
};

struct PgDatabase {
  PropertyGraphSchema schema;
  PropertyGraph graph;
};

struct PgValidationOptions {
  /// Node property keys accepted on every node when String-valued, without a
  /// declaring property type. The schema-dependent mapping passes its "iri"
  /// key here.
  std::vector<std::string> implicit_keys;
};

ValidationReport validate_pg(const PropertyGraph& graph, const PropertyGraphSchema& schema,
                             const PgValidationOptions& options = {});

/// Canonical-form equality. Nodes are keyed by (label, sorted properties);
/// throws AmbiguousCanonicalKey when two nodes of one graph share a key.
bool pg_equal(const PropertyGraph& a, const PropertyGraph& b);
bool pg_schema_equal(const PropertyGraphSchema& a, const PropertyGraphSchema& b);

}  // namespace rdfpg
