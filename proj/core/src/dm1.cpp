#include "rdfpg/dm1.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rdfpg/datatype_map.hpp"
#include "rdfpg/error.hpp"

namespace rdfpg {

namespace {

Iri label_iri(const std::string& label, const std::string& element) {
  if (!Iri::is_valid(label)) {
    throw Error(ErrorCode::NonIriLabel, element + " label '" + label + "' is not an IRI");
  }
  return Iri(label);
}

}  // namespace

PropertyGraphSchema sm1(const RdfGraphSchema& schema) {
  PropertyGraphSchema out;

  std::vector<const ClassNode*> classes;
  for (const auto& c : schema.classes()) classes.push_back(&c);
  std::sort(classes.begin(), classes.end(), [](auto* a, auto* b) { return a->iri < b->iri; });

  std::map<Iri, NodeTypeId> node_types;
  for (const ClassNode* c : classes) {
    if (!vocab::is_excluded_class(c->iri)) node_types.emplace(c->iri, out.add_node_type(c->iri.str()));
  }

  struct Declared {
    const Iri* property;
    const Iri* domain;
    const Iri* range;
  };
  std::vector<Declared> properties;
  for (const auto& p : schema.properties()) {
    properties.push_back({&p.iri, &schema.class_node(p.domain).iri, &schema.class_node(p.range).iri});
  }
  std::sort(properties.begin(), properties.end(), [](const Declared& a, const Declared& b) {
    return std::tie(*a.property, *a.domain, *a.range) < std::tie(*b.property, *b.domain, *b.range);
  });

  auto node_type_for = [&](const Iri& klass, const Iri& property) {
    auto it = node_types.find(klass);
    if (it == node_types.end()) {
      throw Error(ErrorCode::MissingEndpointType,
                  "<" + property.str() + "> refers to <" + klass.str() + ">, which has no node type");
    }
    return it->second;
  };

  for (const Declared& p : properties) {
    NodeTypeId source = node_type_for(*p.domain, *p.property);
    if (vocab::is_datatype(*p.range)) {
      out.add_property_type(source, p.property->str(), to_pg_datatype(*p.range));
    } else {
      out.add_edge_type(p.property->str(), source, node_type_for(*p.range, *p.property));
    }
  }
  return out;
}

PropertyGraph im1(const RdfGraph& graph) {
  PropertyGraph out;
  std::map<RdfNodeId, NodeId> nodes;
  for (const auto& r : graph.resources()) {
    NodeId n = out.add_node(r.klass.str());
    out.add_property(n, std::string(kIriKey), PgValue{r.iri.str(), PgTypeKind::String});
    nodes.emplace(r.id, n);
  }

  std::set<std::pair<RdfNodeId, Iri>> seen;
  for (const auto& e : graph.datatype_edges()) {
    if (!seen.emplace(e.source, e.property).second) {
      throw Error(ErrorCode::DuplicatePropertyLabel,
                  "<" + graph.resource(e.source).iri.str() + "> has several values for <" + e.property.str() +
                      ">; use the schema-independent mapping");
    }
    const LiteralNode& l = graph.literal(e.target);
    out.add_property(nodes.at(e.source), e.property.str(), PgValue{l.lexical, to_pg_datatype(l.datatype)});
  }

  for (const auto& e : graph.object_edges()) {
    out.add_edge(e.property.str(), nodes.at(e.source), nodes.at(e.target));
  }
  return out;
}

PgValidationOptions dm1_validation_options() { return PgValidationOptions{{std::string(kIriKey)}}; }

Dm1Result dm1(const RdfDatabase& database) {
  Dm1Result result{{sm1(database.schema), im1(database.graph)}, validate_rdf(database.graph, database.schema), {}};
  result.target_report = validate_pg(result.database.graph, result.database.schema, dm1_validation_options());
  return result;
}

RdfGraphSchema sm1_inv(const PropertyGraphSchema& schema) {
  RdfGraphSchema out;

  std::set<Iri> datatypes;
  for (const PropertyType& pt : schema.property_types()) datatypes.insert(to_rdf_datatype(pt.datatype));
  for (const Iri& dt : datatypes) out.add_class(dt);

  std::map<std::uint64_t, RdfNodeId> classes;
  for (const NodeType& nt : schema.node_types()) {
    classes.emplace(nt.id.value, out.add_class(label_iri(nt.label, "node type")));
  }

  for (const EdgeType& et : schema.edge_types()) {
    out.add_property(label_iri(et.label, "edge type"), classes.at(et.source.value), classes.at(et.target.value));
  }

  for (const NodeType& nt : schema.node_types()) {
    for (PropertyTypeId id : nt.properties) {
      const PropertyType& pt = schema.property_type(id);
      out.add_property(label_iri(pt.label, "property type"), classes.at(nt.id.value),
                       out.find_class(to_rdf_datatype(pt.datatype))->id);
    }
  }
  return out;
}

RdfGraph im1_inv(const PropertyGraph& graph) {
  RdfGraph out;
  std::map<std::uint64_t, RdfNodeId> resources;

  for (const PgNode& n : graph.nodes()) {
    const Property* iri = nullptr;
    for (PropertyId pid : n.properties) {
      const Property& p = graph.property(pid);
      if (p.label != kIriKey) continue;
      if (iri != nullptr) {
        throw Error(ErrorCode::MissingIriProperty,
                    "node " + std::to_string(n.id.value) + " has more than one 'iri' property");
      }
      iri = &p;
    }
    if (iri == nullptr) {
      throw Error(ErrorCode::MissingIriProperty, "node " + std::to_string(n.id.value) + " has no 'iri' property");
    }
    if (!Iri::is_valid(iri->value.lexical)) {
      throw Error(ErrorCode::NonIriLabel, "node " + std::to_string(n.id.value) + " has 'iri' value '" +
                                              iri->value.lexical + "', which is not an IRI");
    }
    resources.emplace(n.id.value,
                      out.add_resource(Iri(iri->value.lexical), label_iri(n.label, "node")));
  }

  for (const PgNode& n : graph.nodes()) {
    for (PropertyId pid : n.properties) {
      const Property& p = graph.property(pid);
      if (p.label == kIriKey) continue;
      Iri datatype = to_rdf_datatype(type_of_value(p.value));
      const LiteralNode* existing = out.find_literal(p.value.lexical, datatype);
      RdfNodeId literal = existing != nullptr ? existing->id : out.add_literal(p.value.lexical, datatype);
      out.add_datatype_edge(resources.at(n.id.value), label_iri(p.label, "property"), literal);
    }
  }

  for (const PgEdge& e : graph.edges()) {
    if (!e.properties.empty()) {
      throw Error(ErrorCode::UnsupportedEdgeProperty,
                  "edge " + std::to_string(e.id.value) + " ('" + e.label + "') carries properties");
    }
    out.add_object_edge(resources.at(e.source.value), label_iri(e.label, "edge"), resources.at(e.target.value));
  }
  return out;
}

RdfDatabase dm1_inv(const PgDatabase& database) {
  return RdfDatabase{sm1_inv(database.schema), im1_inv(database.graph)};
}

}  // namespace rdfpg
