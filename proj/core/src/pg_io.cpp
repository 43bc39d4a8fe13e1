#include "rdfpg/pg_io.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <regex>
#include <set>

#include "canonical.hpp"
#include "rdfpg/error.hpp"

namespace rdfpg {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& document) {
  try {
    return document.dump(2) + "\n";
  } catch (const json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("cannot encode document: ") + e.what());
  }
}

json property_array(const detail::PropertyKeys& keys) {
  json out = json::array();
  for (const auto& [key, value] : keys) {
    out.push_back(json{{"key", key}, {"value", value.lexical}, {"type", value.datatype.name()}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reading helpers. Every failure names the JSON path of the offending field.

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::FormatError, std::string("$: ") + e.what());
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::FormatError, path + ": " + what);
}

void expect_keys(const json& object, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(path + "." + key, "unknown field");
  }
}

const json& field(const json& object, const std::string& path, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) fail(path + "." + key, "missing field");
  return *it;
}

const json& array_field(const json& object, const std::string& path, const char* key) {
  const json& value = field(object, path, key);
  if (!value.is_array()) fail(path + "." + key, "expected an array");
  return value;
}

std::string string_field(const json& object, const std::string& path, const char* key) {
  const json& value = field(object, path, key);
  if (!value.is_string()) fail(path + "." + key, "expected a string");
  return value.get<std::string>();
}

std::uint64_t id_value(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return value.get<std::uint64_t>();
}

std::uint64_t id_field(const json& object, const std::string& path, const char* key) {
  return id_value(field(object, path, key), path + "." + key);
}

PgDatatype type_field(const json& object, const std::string& path, const char* key) {
  std::string name = string_field(object, path, key);
  auto type = PgDatatype::from_name(name);
  if (!type) fail(path + "." + key, "unknown datatype '" + name + "'");
  return *type;
}

template <typename Owner>
void read_properties(const json& owner, const std::string& path, PropertyGraph& graph, Owner id) {
  const json& properties = array_field(owner, path, "properties");
  for (std::size_t i = 0; i < properties.size(); ++i) {
    std::string p = path + ".properties[" + std::to_string(i) + "]";
    expect_keys(properties[i], p, {"key", "value", "type"});
    graph.add_property(id, string_field(properties[i], p, "key"),
                       PgValue{string_field(properties[i], p, "value"), type_field(properties[i], p, "type")});
  }
}

// ---------------------------------------------------------------------------
// Cypher

bool is_identifier(const std::string& s) {
  static const std::regex pattern("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, pattern);
}

std::string identifier(const std::string& s) {
  if (is_identifier(s)) return s;
  std::string out = "`";
  for (char c : s) {
    if (c == '`') out += '`';
    out += c;
  }
  return out + "`";
}

std::string string_literal(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20) {
          static const char* hex = "0123456789ABCDEF";
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out + "\"";
}

std::string cypher_value(const PgValue& v) {
  static const std::regex integer("[+-]?[0-9]+");
  static const std::regex decimal("[+-]?[0-9]+(\\.[0-9]+)?");
  static const std::regex floating("[+-]?[0-9]+(\\.[0-9]+)?([eE][+-]?[0-9]+)?");
  static const std::regex date("-?[0-9]{4,}-[0-9]{2}-[0-9]{2}");
  static const std::regex date_time(
      "-?[0-9]{4,}-[0-9]{2}-[0-9]{2}T[0-9]{2}:[0-9]{2}:[0-9]{2}(\\.[0-9]+)?(Z|[+-][0-9]{2}:[0-9]{2})?");
  const std::string& s = v.lexical;
  switch (v.datatype.kind()) {
    case PgTypeKind::Integer:
    case PgTypeKind::Int:
      if (std::regex_match(s, integer)) return s;
      break;
    case PgTypeKind::Decimal:
      if (std::regex_match(s, decimal)) return s;
      break;
    case PgTypeKind::Double:
      if (std::regex_match(s, floating)) return s;
      break;
    case PgTypeKind::Boolean:
      if (s == "true" || s == "false") return s;
      break;
    case PgTypeKind::Date:
      if (std::regex_match(s, date)) return "date(" + string_literal(s) + ")";
      break;
    case PgTypeKind::DateTime:
      if (std::regex_match(s, date_time)) return "datetime(" + string_literal(s) + ")";
      break;
    default:
      break;
  }
  return string_literal(s);
}

std::string property_map(const detail::PropertyKeys& keys, const std::string& id_key, const std::string& id) {
  std::vector<std::pair<std::string, std::vector<std::string>>> grouped;
  for (const auto& [key, value] : keys) {
    if (grouped.empty() || grouped.back().first != key) grouped.push_back({key, {}});
    grouped.back().second.push_back(cypher_value(value));
  }
  std::vector<std::string> entries;
  if (!id_key.empty()) entries.push_back(identifier(id_key) + ": " + id);
  for (const auto& [key, values] : grouped) {
    std::string rendered;
    if (values.size() == 1) {
      rendered = values.front();
    } else {
      rendered = "[";
      for (std::size_t i = 0; i < values.size(); ++i) rendered += (i ? ", " : "") + values[i];
      rendered += "]";
    }
    entries.push_back(identifier(key) + ": " + rendered);
  }
  if (entries.empty()) return "";
  std::string out = " {";
  for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? ", " : "") + entries[i];
  return out + "}";
}

}  // namespace

std::string serialize_pg(const PropertyGraph& graph) {
  detail::CanonicalGraph c = detail::canonicalize(graph);
  json nodes = json::array();
  for (std::size_t rank = 0; rank < c.node_order.size(); ++rank) {
    const detail::NodeKey& key = c.node_keys[c.node_order[rank]];
    nodes.push_back(json{{"id", rank}, {"label", key.first}, {"properties", property_array(key.second)}});
  }
  std::map<std::uint64_t, std::size_t> rank_of;
  for (std::size_t i = 0; i < graph.nodes().size(); ++i) rank_of.emplace(graph.nodes()[i].id.value, c.node_rank[i]);

  json edges = json::array();
  for (std::size_t rank = 0; rank < c.edge_order.size(); ++rank) {
    const PgEdge& e = graph.edges()[c.edge_order[rank]];
    const auto& key = c.edge_keys[c.edge_order[rank]];
    edges.push_back(json{{"id", rank},
                         {"label", e.label},
                         {"source", rank_of.at(e.source.value)},
                         {"target", rank_of.at(e.target.value)},
                         {"properties", property_array(std::get<2>(key))}});
  }
  return dump(json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}});
}

PropertyGraph parse_pg(std::string_view text) {
  json document = parse_json(text);
  expect_keys(document, "$", {"nodes", "edges"});
  PropertyGraph graph;
  std::map<std::uint64_t, NodeId> nodes;

  const json& node_list = array_field(document, "$", "nodes");
  for (std::size_t i = 0; i < node_list.size(); ++i) {
    std::string path = "$.nodes[" + std::to_string(i) + "]";
    const json& n = node_list[i];
    expect_keys(n, path, {"id", "label", "properties"});
    std::uint64_t id = id_field(n, path, "id");
    if (nodes.contains(id)) fail(path + ".id", "duplicate node id " + std::to_string(id));
    NodeId node = graph.add_node(string_field(n, path, "label"));
    nodes.emplace(id, node);
    read_properties(n, path, graph, node);
  }

  const json& edge_list = array_field(document, "$", "edges");
  std::set<std::uint64_t> edge_ids;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    std::string path = "$.edges[" + std::to_string(i) + "]";
    const json& e = edge_list[i];
    expect_keys(e, path, {"id", "label", "source", "target", "properties"});
    std::uint64_t id = id_field(e, path, "id");
    if (!edge_ids.insert(id).second) fail(path + ".id", "duplicate edge id " + std::to_string(id));
    std::string label = string_field(e, path, "label");
    std::uint64_t source = id_field(e, path, "source");
    std::uint64_t target = id_field(e, path, "target");
    auto s = nodes.find(source);
    auto t = nodes.find(target);
    if (s == nodes.end() || t == nodes.end()) {
      throw Error(ErrorCode::DanglingEdgeEndpoint,
                  path + ": edge references node " + std::to_string(s == nodes.end() ? source : target) +
                      ", which does not exist");
    }
    EdgeId edge = graph.add_edge(std::move(label), s->second, t->second);
    read_properties(e, path, graph, edge);
  }
  return graph;
}

std::string serialize_pg_schema(const PropertyGraphSchema& schema) {
  using TypeKey = std::pair<std::string, PgDatatype>;
  auto sorted_types = [&](const std::vector<PropertyTypeId>& ids) {
    std::vector<TypeKey> keys;
    for (PropertyTypeId id : ids) {
      const PropertyType& pt = schema.property_type(id);
      keys.emplace_back(pt.label, pt.datatype);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };

  json property_types = json::array();
  auto emit = [&](const std::vector<TypeKey>& keys) {
    json ids = json::array();
    for (const auto& [label, datatype] : keys) {
      std::size_t id = property_types.size();
      property_types.push_back(json{{"id", id}, {"key", label}, {"type", datatype.name()}});
      ids.push_back(id);
    }
    return ids;
  };

  std::vector<const NodeType*> node_types;
  for (const NodeType& nt : schema.node_types()) node_types.push_back(&nt);
  std::sort(node_types.begin(), node_types.end(), [](auto* a, auto* b) { return a->label < b->label; });
  std::map<std::uint64_t, std::size_t> node_rank;
  json nodes = json::array();
  for (std::size_t rank = 0; rank < node_types.size(); ++rank) {
    node_rank.emplace(node_types[rank]->id.value, rank);
    nodes.push_back(json{{"id", rank}, {"label", node_types[rank]->label},
                         {"properties", emit(sorted_types(node_types[rank]->properties))}});
  }

  using EdgeKey = std::tuple<std::size_t, std::string, std::size_t, std::vector<TypeKey>>;
  std::vector<EdgeKey> edge_keys;
  for (const EdgeType& et : schema.edge_types()) {
    edge_keys.emplace_back(node_rank.at(et.source.value), et.label, node_rank.at(et.target.value),
                           sorted_types(et.properties));
  }
  std::sort(edge_keys.begin(), edge_keys.end());
  json edges = json::array();
  for (std::size_t rank = 0; rank < edge_keys.size(); ++rank) {
    const auto& [source, label, target, types] = edge_keys[rank];
    edges.push_back(json{{"id", rank}, {"label", label}, {"source", source}, {"target", target},
                         {"properties", emit(types)}});
  }

  std::vector<PropertyTypeId> unattached;
  for (const PropertyType& pt : schema.property_types()) {
    if (!schema.is_attached(pt.id)) unattached.push_back(pt.id);
  }
  emit(sorted_types(unattached));

  return dump(json{{"node_types", std::move(nodes)},
                   {"edge_types", std::move(edges)},
                   {"property_types", std::move(property_types)}});
}

PropertyGraphSchema parse_pg_schema(std::string_view text) {
  json document = parse_json(text);
  expect_keys(document, "$", {"node_types", "edge_types", "property_types"});
  PropertyGraphSchema schema;

  std::map<std::uint64_t, PropertyTypeId> property_types;
  const json& pt_list = array_field(document, "$", "property_types");
  for (std::size_t i = 0; i < pt_list.size(); ++i) {
    std::string path = "$.property_types[" + std::to_string(i) + "]";
    expect_keys(pt_list[i], path, {"id", "key", "type"});
    std::uint64_t id = id_field(pt_list[i], path, "id");
    if (property_types.contains(id)) fail(path + ".id", "duplicate property type id " + std::to_string(id));
    property_types.emplace(
        id, schema.add_property_type(string_field(pt_list[i], path, "key"), type_field(pt_list[i], path, "type")));
  }

  auto attach_all = [&](const json& owner, const std::string& path, auto id) {
    const json& refs = array_field(owner, path, "properties");
    for (std::size_t i = 0; i < refs.size(); ++i) {
      std::string p = path + ".properties[" + std::to_string(i) + "]";
      std::uint64_t ref = id_value(refs[i], p);
      auto it = property_types.find(ref);
      if (it == property_types.end()) fail(p, "unknown property type " + std::to_string(ref));
      if (schema.is_attached(it->second)) fail(p, "property type " + std::to_string(ref) + " already has an owner");
      schema.attach(id, it->second);
    }
  };

  std::map<std::uint64_t, NodeTypeId> node_types;
  const json& nt_list = array_field(document, "$", "node_types");
  for (std::size_t i = 0; i < nt_list.size(); ++i) {
    std::string path = "$.node_types[" + std::to_string(i) + "]";
    expect_keys(nt_list[i], path, {"id", "label", "properties"});
    std::uint64_t id = id_field(nt_list[i], path, "id");
    if (node_types.contains(id)) fail(path + ".id", "duplicate node type id " + std::to_string(id));
    std::string label = string_field(nt_list[i], path, "label");
    if (schema.find_node_type(label) != nullptr) fail(path + ".label", "duplicate node type label '" + label + "'");
    NodeTypeId nt = schema.add_node_type(std::move(label));
    node_types.emplace(id, nt);
    attach_all(nt_list[i], path, nt);
  }

  const json& et_list = array_field(document, "$", "edge_types");
  std::set<std::uint64_t> edge_ids;
  for (std::size_t i = 0; i < et_list.size(); ++i) {
    std::string path = "$.edge_types[" + std::to_string(i) + "]";
    expect_keys(et_list[i], path, {"id", "label", "source", "target", "properties"});
    std::uint64_t id = id_field(et_list[i], path, "id");
    if (!edge_ids.insert(id).second) fail(path + ".id", "duplicate edge type id " + std::to_string(id));
    std::string label = string_field(et_list[i], path, "label");
    auto endpoint = [&](const char* key) {
      std::uint64_t ref = id_field(et_list[i], path, key);
      auto it = node_types.find(ref);
      if (it == node_types.end()) fail(path + "." + key, "unknown node type " + std::to_string(ref));
      return it->second;
    };
    NodeTypeId source = endpoint("source");
    NodeTypeId target = endpoint("target");
    EdgeTypeId et = schema.add_edge_type(std::move(label), source, target);
    attach_all(et_list[i], path, et);
  }
  return schema;
}

std::string export_import_script(const PropertyGraph& graph) {
  if (graph.empty()) return "";
  std::set<std::string> keys;
  for (const Property& p : graph.properties()) keys.insert(p.label);
  std::string id_key = "_pgid";
  for (int suffix = 1; keys.contains(id_key); ++suffix) id_key = "_pgid" + std::to_string(suffix);

  detail::CanonicalGraph c = detail::canonicalize(graph);
  std::map<std::uint64_t, std::size_t> rank_of;
  for (std::size_t i = 0; i < graph.nodes().size(); ++i) rank_of.emplace(graph.nodes()[i].id.value, c.node_rank[i]);

  std::string out;
  for (std::size_t rank = 0; rank < c.node_order.size(); ++rank) {
    const detail::NodeKey& key = c.node_keys[c.node_order[rank]];
    out += "CREATE (:" + identifier(key.first) + property_map(key.second, id_key, std::to_string(rank)) + ");\n";
  }
  for (std::size_t i : c.edge_order) {
    const PgEdge& e = graph.edges()[i];
    out += "MATCH (a {" + identifier(id_key) + ": " + std::to_string(rank_of.at(e.source.value)) + "}), (b {" +
           identifier(id_key) + ": " + std::to_string(rank_of.at(e.target.value)) + "}) CREATE (a)-[:" +
           identifier(e.label) + property_map(std::get<2>(c.edge_keys[i]), "", "") + "]->(b);\n";
  }
  out += "MATCH (n) REMOVE n." + identifier(id_key) + ";\n";
  return out;
}

}  // namespace rdfpg
