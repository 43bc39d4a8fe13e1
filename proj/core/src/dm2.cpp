#include "rdfpg/dm2.hpp"

#include <map>

#include "rdfpg/error.hpp"

namespace rdfpg {

namespace {

PgValue str(std::string s) { return PgValue{std::move(s), PgTypeKind::String}; }

std::string element_name(std::string_view kind, std::uint64_t id) {
  return std::string(kind) + " " + std::to_string(id);
}

// Returns the value of the single property labelled `key`, rejecting
// missing, repeated, extra and non-String properties.
std::map<std::string, std::string> required(const PropertyGraph& graph, const std::vector<PropertyId>& ids,
                                            std::initializer_list<std::string_view> keys,
                                            const std::string& element) {
  std::map<std::string, std::string> values;
  for (PropertyId id : ids) {
    const Property& p = graph.property(id);
    bool known = false;
    for (std::string_view k : keys) known = known || p.label == k;
    if (!known) {
      throw Error(ErrorCode::SchemaViolation, element + " has undeclared property '" + p.label + "'");
    }
    if (p.value.datatype != PgDatatype(PgTypeKind::String)) {
      throw Error(ErrorCode::SchemaViolation,
                  element + " property '" + p.label + "' has type " + p.value.datatype.name() + ", expected String");
    }
    if (!values.emplace(p.label, p.value.lexical).second) {
      throw Error(ErrorCode::MissingRequiredProperty, element + " repeats property '" + p.label + "'");
    }
  }
  for (std::string_view k : keys) {
    if (!values.contains(std::string(k))) {
      throw Error(ErrorCode::MissingRequiredProperty, element + " lacks property '" + std::string(k) + "'");
    }
  }
  return values;
}

Iri iri_value(const std::string& value, const std::string& element, std::string_view key) {
  if (!Iri::is_valid(value)) {
    throw Error(ErrorCode::SchemaViolation,
                element + " property '" + std::string(key) + "' = '" + value + "' is not an IRI");
  }
  return Iri(value);
}

}  // namespace

PropertyGraphSchema generic_pg_schema() {
  PropertyGraphSchema s;
  NodeTypeId resource = s.add_node_type(std::string(generic::kResource));
  s.add_property_type(resource, std::string(generic::kIri), PgTypeKind::String);
  s.add_property_type(resource, std::string(generic::kType), PgTypeKind::String);
  NodeTypeId literal = s.add_node_type(std::string(generic::kLiteral));
  s.add_property_type(literal, std::string(generic::kValue), PgTypeKind::String);
  s.add_property_type(literal, std::string(generic::kType), PgTypeKind::String);
  EdgeTypeId object = s.add_edge_type(std::string(generic::kObjectProperty), resource, resource);
  s.add_property_type(object, std::string(generic::kType), PgTypeKind::String);
  EdgeTypeId datatype = s.add_edge_type(std::string(generic::kDatatypeProperty), resource, literal);
  s.add_property_type(datatype, std::string(generic::kType), PgTypeKind::String);
  return s;
}

PropertyGraph im2(const RdfGraph& graph) {
  PropertyGraph out;
  std::map<RdfNodeId, NodeId> nodes;
  for (const ResourceNode& r : graph.resources()) {
    NodeId n = out.add_node(std::string(generic::kResource));
    out.add_property(n, std::string(generic::kIri), str(r.iri.str()));
    out.add_property(n, std::string(generic::kType), str(r.klass.str()));
    nodes.emplace(r.id, n);
  }
  for (const LiteralNode& l : graph.literals()) {
    NodeId n = out.add_node(std::string(generic::kLiteral));
    out.add_property(n, std::string(generic::kType), str(l.datatype.str()));
    out.add_property(n, std::string(generic::kValue), str(l.lexical));
    nodes.emplace(l.id, n);
  }
  for (const RdfEdge& e : graph.object_edges()) {
    EdgeId id = out.add_edge(std::string(generic::kObjectProperty), nodes.at(e.source), nodes.at(e.target));
    out.add_property(id, std::string(generic::kType), str(e.property.str()));
  }
  for (const RdfEdge& e : graph.datatype_edges()) {
    EdgeId id = out.add_edge(std::string(generic::kDatatypeProperty), nodes.at(e.source), nodes.at(e.target));
    out.add_property(id, std::string(generic::kType), str(e.property.str()));
  }
  return out;
}

PgDatabase dm2(const RdfGraph& graph) { return PgDatabase{generic_pg_schema(), im2(graph)}; }

RdfGraph im2_inv(const PropertyGraph& graph) {
  RdfGraph out;
  std::map<std::uint64_t, RdfNodeId> nodes;

  for (const PgNode& n : graph.nodes()) {
    std::string element = element_name("node", n.id.value);
    if (n.label == generic::kResource) {
      auto v = required(graph, n.properties, {generic::kIri, generic::kType}, element);
      Iri iri = iri_value(v.at(std::string(generic::kIri)), element, generic::kIri);
      Iri klass = iri_value(v.at(std::string(generic::kType)), element, generic::kType);
      nodes.emplace(n.id.value, out.add_resource(std::move(iri), std::move(klass)));
    } else if (n.label == generic::kLiteral) {
      auto v = required(graph, n.properties, {generic::kValue, generic::kType}, element);
      Iri datatype = iri_value(v.at(std::string(generic::kType)), element, generic::kType);
      const std::string& lexical = v.at(std::string(generic::kValue));
      if (out.find_literal(lexical, datatype) != nullptr) {
        throw Error(ErrorCode::SchemaViolation, element + " duplicates literal \"" + lexical + "\"^^<" +
                                                    datatype.str() + ">");
      }
      nodes.emplace(n.id.value, out.add_literal(lexical, std::move(datatype)));
    } else {
      throw Error(ErrorCode::SchemaViolation, element + " has label '" + n.label + "', expected " +
                                                  std::string(generic::kResource) + " or " +
                                                  std::string(generic::kLiteral));
    }
  }

  for (const PgEdge& e : graph.edges()) {
    std::string element = element_name("edge", e.id.value);
    bool object = e.label == generic::kObjectProperty;
    if (!object && e.label != generic::kDatatypeProperty) {
      throw Error(ErrorCode::SchemaViolation, element + " has label '" + e.label + "', expected " +
                                                  std::string(generic::kObjectProperty) + " or " +
                                                  std::string(generic::kDatatypeProperty));
    }
    RdfNodeId source = nodes.at(e.source.value);
    RdfNodeId target = nodes.at(e.target.value);
    if (!out.is_resource(source) || (object ? !out.is_resource(target) : !out.is_literal(target))) {
      throw Error(ErrorCode::SchemaViolation, element + " ('" + e.label + "') connects the wrong kinds of node");
    }
    auto v = required(graph, e.properties, {generic::kType}, element);
    Iri property = iri_value(v.at(std::string(generic::kType)), element, generic::kType);
    if (object) {
      out.add_object_edge(source, std::move(property), target);
    } else {
      out.add_datatype_edge(source, std::move(property), target);
    }
  }
  return out;
}

}  // namespace rdfpg
