#include "rdfpg/property_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "canonical.hpp"
#include "rdfpg/error.hpp"

namespace rdfpg {

// ---------------------------------------------------------------------------
// PgDatatype

namespace {

constexpr std::array<std::pair<PgTypeKind, std::string_view>, 8> kKindNames = {{
    {PgTypeKind::String, "String"},
    {PgTypeKind::Integer, "Integer"},
    {PgTypeKind::Int, "Int"},
    {PgTypeKind::Decimal, "Decimal"},
    {PgTypeKind::Double, "Double"},
    {PgTypeKind::Boolean, "Boolean"},
    {PgTypeKind::Date, "Date"},
    {PgTypeKind::DateTime, "DateTime"},
}};

}  // namespace

PgDatatype PgDatatype::custom(Iri iri) {
  static const std::array<const Iri*, 8> mapped = {
      &vocab::xsd_string(), &vocab::xsd_integer(), &vocab::xsd_int(),  &vocab::xsd_decimal(),
      &vocab::xsd_double(), &vocab::xsd_boolean(), &vocab::xsd_date(), &vocab::xsd_date_time()};
  if (std::any_of(mapped.begin(), mapped.end(), [&](const Iri* m) { return *m == iri; })) {
    throw Error(ErrorCode::InvalidIri, "<" + iri.str() + "> has a built-in PG datatype and cannot be Custom");
  }
  PgDatatype t(PgTypeKind::Custom);
  t.custom_ = std::move(iri);
  return t;
}

std::string PgDatatype::name() const {
  if (kind_ == PgTypeKind::Custom) return "<" + custom_.str() + ">";
  for (const auto& [kind, name] : kKindNames) {
    if (kind == kind_) return std::string(name);
  }
  return "?";
}

std::optional<PgDatatype> PgDatatype::from_name(std::string_view name) {
  if (name.size() > 2 && name.front() == '<' && name.back() == '>') {
    std::string_view inner = name.substr(1, name.size() - 2);
    if (!Iri::is_valid(inner)) return std::nullopt;
    try {
      return custom(Iri(std::string(inner)));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  for (const auto& [kind, kind_name] : kKindNames) {
    if (kind_name == name) return PgDatatype(kind);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PropertyGraph

NodeId PropertyGraph::add_node(std::string label) {
  NodeId id{next_node_++};
  node_index_.emplace(id.value, nodes_.size());
  nodes_.push_back(PgNode{id, std::move(label), {}});
  return id;
}

EdgeId PropertyGraph::add_edge(std::string label, NodeId source, NodeId target) {
  if (!has_node(source) || !has_node(target)) {
    throw Error(ErrorCode::DanglingEdgeEndpoint, "edge '" + label + "' references a missing node");
  }
  EdgeId id{next_edge_++};
  edge_index_.emplace(id.value, edges_.size());
  edges_.push_back(PgEdge{id, std::move(label), source, target, {}});
  return id;
}

PropertyId PropertyGraph::add_property(NodeId owner, std::string label, PgValue value) {
  auto it = node_index_.find(owner.value);
  if (it == node_index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no node " + std::to_string(owner.value));
  }
  PropertyId id{next_property_++};
  properties_.push_back(Property{id, std::move(label), std::move(value)});
  nodes_[it->second].properties.push_back(id);
  return id;
}

PropertyId PropertyGraph::add_property(EdgeId owner, std::string label, PgValue value) {
  auto it = edge_index_.find(owner.value);
  if (it == edge_index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no edge " + std::to_string(owner.value));
  }
  PropertyId id{next_property_++};
  properties_.push_back(Property{id, std::move(label), std::move(value)});
  edges_[it->second].properties.push_back(id);
  return id;
}

const PgNode& PropertyGraph::node(NodeId id) const {
  auto it = node_index_.find(id.value);
  if (it == node_index_.end()) throw Error(ErrorCode::UnknownElement, "no node " + std::to_string(id.value));
  return nodes_[it->second];
}

const PgEdge& PropertyGraph::edge(EdgeId id) const {
  auto it = edge_index_.find(id.value);
  if (it == edge_index_.end()) throw Error(ErrorCode::UnknownElement, "no edge " + std::to_string(id.value));
  return edges_[it->second];
}

const Property& PropertyGraph::property(PropertyId id) const {
  // Property ids are dense and assigned in insertion order.
  if (id.value >= properties_.size()) {
    throw Error(ErrorCode::UnknownElement, "no property " + std::to_string(id.value));
  }
  return properties_[id.value];
}

// ---------------------------------------------------------------------------
// PropertyGraphSchema

NodeTypeId PropertyGraphSchema::add_node_type(std::string label) {
  if (node_type_by_label_.contains(label)) {
    throw Error(ErrorCode::DuplicateElement, "node type '" + label + "' already exists");
  }
  NodeTypeId id{next_node_type_++};
  node_type_by_label_.emplace(label, id.value);
  node_type_index_.emplace(id.value, node_types_.size());
  node_types_.push_back(NodeType{id, std::move(label), {}});
  return id;
}

EdgeTypeId PropertyGraphSchema::add_edge_type(std::string label, NodeTypeId source, NodeTypeId target) {
  if (!node_type_index_.contains(source.value) || !node_type_index_.contains(target.value)) {
    throw Error(ErrorCode::UnknownElement, "edge type '" + label + "' references a missing node type");
  }
  EdgeTypeId id{next_edge_type_++};
  edge_type_index_.emplace(id.value, edge_types_.size());
  edge_types_.push_back(EdgeType{id, std::move(label), source, target, {}});
  return id;
}

PropertyTypeId PropertyGraphSchema::add_property_type(std::string label, PgDatatype datatype) {
  PropertyTypeId id{next_property_type_++};
  property_type_index_.emplace(id.value, property_types_.size());
  property_types_.push_back(PropertyType{id, std::move(label), std::move(datatype)});
  return id;
}

void PropertyGraphSchema::attach(NodeTypeId owner, PropertyTypeId property) {
  auto it = node_type_index_.find(owner.value);
  if (it == node_type_index_.end() || !property_type_index_.contains(property.value)) {
    throw Error(ErrorCode::UnknownElement, "attach: unknown node type or property type");
  }
  if (owned_.contains(property.value)) {
    throw Error(ErrorCode::DuplicateElement,
                "property type " + std::to_string(property.value) + " already has an owner");
  }
  owned_.emplace(property.value, true);
  node_types_[it->second].properties.push_back(property);
}

void PropertyGraphSchema::attach(EdgeTypeId owner, PropertyTypeId property) {
  auto it = edge_type_index_.find(owner.value);
  if (it == edge_type_index_.end() || !property_type_index_.contains(property.value)) {
    throw Error(ErrorCode::UnknownElement, "attach: unknown edge type or property type");
  }
  if (owned_.contains(property.value)) {
    throw Error(ErrorCode::DuplicateElement,
                "property type " + std::to_string(property.value) + " already has an owner");
  }
  owned_.emplace(property.value, true);
  edge_types_[it->second].properties.push_back(property);
}

PropertyTypeId PropertyGraphSchema::add_property_type(NodeTypeId owner, std::string label,
                                                      PgDatatype datatype) {
  PropertyTypeId id = add_property_type(std::move(label), std::move(datatype));
  attach(owner, id);
  return id;
}

PropertyTypeId PropertyGraphSchema::add_property_type(EdgeTypeId owner, std::string label,
                                                      PgDatatype datatype) {
  PropertyTypeId id = add_property_type(std::move(label), std::move(datatype));
  attach(owner, id);
  return id;
}

const NodeType& PropertyGraphSchema::node_type(NodeTypeId id) const {
  auto it = node_type_index_.find(id.value);
  if (it == node_type_index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no node type " + std::to_string(id.value));
  }
  return node_types_[it->second];
}

const EdgeType& PropertyGraphSchema::edge_type(EdgeTypeId id) const {
  auto it = edge_type_index_.find(id.value);
  if (it == edge_type_index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no edge type " + std::to_string(id.value));
  }
  return edge_types_[it->second];
}

const PropertyType& PropertyGraphSchema::property_type(PropertyTypeId id) const {
  auto it = property_type_index_.find(id.value);
  if (it == property_type_index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no property type " + std::to_string(id.value));
  }
  return property_types_[it->second];
}

const NodeType* PropertyGraphSchema::find_node_type(std::string_view label) const {
  auto it = node_type_by_label_.find(label);
  return it == node_type_by_label_.end() ? nullptr : &node_types_[node_type_index_.at(it->second)];
}

// ---------------------------------------------------------------------------
// Validity

namespace {

bool allowed(const PropertyGraphSchema& schema, const std::vector<PropertyTypeId>& declared,
             const Property& p) {
  return std::any_of(declared.begin(), declared.end(), [&](PropertyTypeId id) {
    const PropertyType& pt = schema.property_type(id);
    return pt.label == p.label && pt.datatype == type_of_value(p.value);
  });
}

std::string describe(const Property& p) {
  return "'" + p.label + "' = \"" + p.value.lexical + "\" : " + p.value.datatype.name();
}

}  // namespace

ValidationReport validate_pg(const PropertyGraph& graph, const PropertyGraphSchema& schema,
                             const PgValidationOptions& options) {
  ValidationReport report;
  auto implicit = [&](const Property& p) {
    return p.value.datatype == PgDatatype(PgTypeKind::String) &&
           std::find(options.implicit_keys.begin(), options.implicit_keys.end(), p.label) !=
               options.implicit_keys.end();
  };

  for (const PgNode& n : graph.nodes()) {
    const NodeType* nt = schema.find_node_type(n.label);
    if (nt == nullptr) {
      report.violations.push_back({Rule::P1a, n.id.value, "no node type labelled '" + n.label + "'"});
      continue;
    }
    for (PropertyId pid : n.properties) {
      const Property& p = graph.property(pid);
      if (!implicit(p) && !allowed(schema, nt->properties, p)) {
        report.violations.push_back(
            {Rule::P1b, n.id.value, "property " + describe(p) + " is not declared by node type '" + n.label + "'"});
      }
    }
  }

  for (const PgEdge& e : graph.edges()) {
    const std::string& source_label = graph.node(e.source).label;
    const std::string& target_label = graph.node(e.target).label;
    std::vector<const EdgeType*> candidates;
    for (const EdgeType& et : schema.edge_types()) {
      if (et.label == e.label && schema.node_type(et.source).label == source_label &&
          schema.node_type(et.target).label == target_label) {
        candidates.push_back(&et);
      }
    }
    if (candidates.empty()) {
      report.violations.push_back({Rule::P2a, e.id.value,
                                   "no edge type '" + e.label + "' from '" + source_label + "' to '" +
                                       target_label + "'"});
      continue;
    }
    // Any matching edge type whose property types admit every property will do.
    bool ok = std::any_of(candidates.begin(), candidates.end(), [&](const EdgeType* et) {
      return std::all_of(e.properties.begin(), e.properties.end(),
                         [&](PropertyId pid) { return allowed(schema, et->properties, graph.property(pid)); });
    });
    if (!ok) {
      for (PropertyId pid : e.properties) {
        const Property& p = graph.property(pid);
        if (!allowed(schema, candidates.front()->properties, p)) {
          report.violations.push_back(
              {Rule::P2b, e.id.value, "property " + describe(p) + " is not declared by edge type '" + e.label + "'"});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace detail {

PropertyKeys property_keys(const PropertyGraph& graph, const std::vector<PropertyId>& ids) {
  PropertyKeys keys;
  keys.reserve(ids.size());
  for (PropertyId id : ids) {
    const Property& p = graph.property(id);
    keys.emplace_back(p.label, p.value);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

CanonicalGraph canonicalize(const PropertyGraph& graph) {
  CanonicalGraph c;
  const auto& nodes = graph.nodes();
  std::map<std::uint64_t, std::size_t> position;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    c.node_keys.emplace_back(nodes[i].label, property_keys(graph, nodes[i].properties));
    position.emplace(nodes[i].id.value, i);
  }
  c.node_order.resize(nodes.size());
  std::iota(c.node_order.begin(), c.node_order.end(), std::size_t{0});
  std::stable_sort(c.node_order.begin(), c.node_order.end(),
                   [&](std::size_t a, std::size_t b) { return c.node_keys[a] < c.node_keys[b]; });
  c.node_rank.resize(nodes.size());
  for (std::size_t r = 0; r < c.node_order.size(); ++r) {
    c.node_rank[c.node_order[r]] = r;
    if (r > 0 && c.node_keys[c.node_order[r]] == c.node_keys[c.node_order[r - 1]]) c.ambiguous = true;
  }

  const auto& edges = graph.edges();
  for (const PgEdge& e : edges) {
    c.edge_keys.emplace_back(c.node_keys[position.at(e.source.value)], e.label,
                             property_keys(graph, e.properties), c.node_keys[position.at(e.target.value)]);
  }
  c.edge_order.resize(edges.size());
  std::iota(c.edge_order.begin(), c.edge_order.end(), std::size_t{0});
  std::stable_sort(c.edge_order.begin(), c.edge_order.end(),
                   [&](std::size_t a, std::size_t b) { return c.edge_keys[a] < c.edge_keys[b]; });
  return c;
}

}  // namespace detail

bool pg_equal(const PropertyGraph& a, const PropertyGraph& b) {
  auto ca = detail::canonicalize(a);
  auto cb = detail::canonicalize(b);
  if (ca.ambiguous || cb.ambiguous) {
    throw Error(ErrorCode::AmbiguousCanonicalKey,
                "two nodes share a label and property set; canonical comparison is undefined");
  }
  auto sorted_keys = [](const auto& keys, const std::vector<std::size_t>& order) {
    std::vector<std::decay_t<decltype(keys[0])>> out;
    out.reserve(order.size());
    for (std::size_t i : order) out.push_back(keys[i]);
    return out;
  };
  return sorted_keys(ca.node_keys, ca.node_order) == sorted_keys(cb.node_keys, cb.node_order) &&
         sorted_keys(ca.edge_keys, ca.edge_order) == sorted_keys(cb.edge_keys, cb.edge_order);
}

namespace {

using TypeKeys = std::vector<std::pair<std::string, PgDatatype>>;

TypeKeys type_keys(const PropertyGraphSchema& s, const std::vector<PropertyTypeId>& ids) {
  TypeKeys keys;
  for (PropertyTypeId id : ids) {
    const PropertyType& pt = s.property_type(id);
    keys.emplace_back(pt.label, pt.datatype);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

struct SchemaKeys {
  std::vector<std::pair<std::string, TypeKeys>> node_types;
  std::vector<std::tuple<std::string, std::string, std::string, TypeKeys>> edge_types;
  TypeKeys unattached;

  friend bool operator==(const SchemaKeys&, const SchemaKeys&) = default;
};

SchemaKeys schema_keys(const PropertyGraphSchema& s) {
  SchemaKeys k;
  for (const NodeType& nt : s.node_types()) k.node_types.emplace_back(nt.label, type_keys(s, nt.properties));
  for (const EdgeType& et : s.edge_types()) {
    k.edge_types.emplace_back(s.node_type(et.source).label, et.label, s.node_type(et.target).label,
                              type_keys(s, et.properties));
  }
  for (const PropertyType& pt : s.property_types()) {
    if (!s.is_attached(pt.id)) k.unattached.emplace_back(pt.label, pt.datatype);
  }
  std::sort(k.node_types.begin(), k.node_types.end());
  std::sort(k.edge_types.begin(), k.edge_types.end());
  std::sort(k.unattached.begin(), k.unattached.end());
  return k;
}

}  // namespace

bool pg_schema_equal(const PropertyGraphSchema& a, const PropertyGraphSchema& b) {
  return schema_keys(a) == schema_keys(b);
}

}  // namespace rdfpg
