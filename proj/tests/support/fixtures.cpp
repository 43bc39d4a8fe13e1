#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rdfpg/turtle.hpp"

namespace rdfpg::testing {

std::string data_path(const std::string& name) { return std::string(RDFPG_TEST_DATA_DIR) + "/" + name; }
std::string docs_path(const std::string& name) { return std::string(RDFPG_DOCS_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TripleSet example1_triples() { return parse_turtle(read_text(data_path("example1.ttl"))); }
TripleSet example2_triples() { return parse_turtle(read_text(data_path("example2.ttl"))); }

RdfDatabase example_database() {
  return RdfDatabase{build_rdf_schema(example2_triples()), build_rdf_graph(example1_triples())};
}

PropertyGraph fig3_graph() {
  PropertyGraph g;
  NodeId org = g.add_node("Organisation");
  g.add_property(org, "name", {"Tesla, Inc.", PgTypeKind::String});
  g.add_property(org, "creation", {"2003-07-01", PgTypeKind::Date});
  NodeId person = g.add_node("Person");
  g.add_property(person, "birthName", {"Elon Musk", PgTypeKind::String});
  g.add_property(person, "age", {"46", PgTypeKind::Integer});
  EdgeId ceo = g.add_edge("ceo", org, person);
  g.add_property(ceo, "since", {"2003", PgTypeKind::Date});
  return g;
}

PropertyGraphSchema fig4_schema() {
  PropertyGraphSchema s;
  NodeTypeId org = s.add_node_type("Organisation");
  s.add_property_type(org, "name", PgTypeKind::String);
  s.add_property_type(org, "creation", PgTypeKind::Date);
  NodeTypeId person = s.add_node_type("Person");
  s.add_property_type(person, "birthName", PgTypeKind::String);
  s.add_property_type(person, "age", PgTypeKind::Integer);
  EdgeTypeId ceo = s.add_edge_type("ceo", org, person);
  s.add_property_type(ceo, "since", PgTypeKind::Date);
  return s;
}

}  // namespace rdfpg::testing
