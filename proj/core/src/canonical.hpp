#pragma once

// Canonical keys for property graphs, shared by equality and serialization.

#include <string>
#include <tuple>
#include <vector>

#include "rdfpg/property_graph.hpp"

namespace rdfpg::detail {

using PropertyKey = std::pair<std::string, PgValue>;
using PropertyKeys = std::vector<PropertyKey>;
using NodeKey = std::pair<std::string, PropertyKeys>;
using EdgeKey = std::tuple<NodeKey, std::string, PropertyKeys, NodeKey>;

PropertyKeys property_keys(const PropertyGraph& graph, const std::vector<PropertyId>& ids);

struct CanonicalGraph {
  std::vector<NodeKey> node_keys;           // parallel to graph.nodes()
  std::vector<std::size_t> node_order;      // indices into graph.nodes(), canonical order
  std::vector<std::size_t> node_rank;       // position of graph.nodes()[i] in node_order
  std::vector<EdgeKey> edge_keys;           // parallel to graph.edges()
  std::vector<std::size_t> edge_order;
  bool ambiguous = false;                   // two nodes share a key
};

CanonicalGraph canonicalize(const PropertyGraph& graph);

}  // namespace rdfpg::detail
