#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "rdfpg/dm2.hpp"
#include "rdfpg/error.hpp"
#include "rdfpg/generator.hpp"
#include "rdfpg/pg_io.hpp"

namespace rdfpg {
namespace {

ErrorCode error_of(auto&& f, std::string* message = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::IoError;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

TEST(PgJson, Fig3Structure) {
  nlohmann::json doc = nlohmann::json::parse(serialize_pg(testing::fig3_graph()));
  ASSERT_EQ(doc["nodes"].size(), 2u);
  ASSERT_EQ(doc["edges"].size(), 1u);
  std::size_t properties = doc["edges"][0]["properties"].size();
  for (const auto& n : doc["nodes"]) properties += n["properties"].size();
  EXPECT_EQ(properties, 5u);
  EXPECT_EQ(doc["edges"][0]["properties"][0]["type"], "Date");
}

TEST(PgJson, EmptyGraph) {
  std::string text = serialize_pg(PropertyGraph());
  EXPECT_EQ(nlohmann::json::parse(text), nlohmann::json::parse(R"({"nodes": [], "edges": []})"));
  EXPECT_TRUE(parse_pg(text).empty());
  EXPECT_TRUE(parse_pg_schema(serialize_pg_schema(PropertyGraphSchema())).empty());
}

TEST(PgJson, OrderAndIdsDoNotAffectBytes) {
  PropertyGraph a;
  NodeId a1 = a.add_node("A");
  NodeId a2 = a.add_node("B");
  a.add_property(a1, "k", {"1", PgTypeKind::Integer});
  a.add_property(a1, "j", {"x", PgTypeKind::String});
  a.add_edge("e", a1, a2);

  PropertyGraph b;
  NodeId b2 = b.add_node("B");
  NodeId b1 = b.add_node("A");
  b.add_edge("e", b1, b2);
  b.add_property(b1, "j", {"x", PgTypeKind::String});
  b.add_property(b1, "k", {"1", PgTypeKind::Integer});
  EXPECT_EQ(serialize_pg(a), serialize_pg(b));
}

TEST(PgJson, CustomTypesAndAwkwardStrings) {
  PropertyGraph g;
  NodeId n = g.add_node("la\"bel\né");
  g.add_property(n, "t", {"21.5", PgDatatype::custom(Iri("http://example.org/dt/celsius"))});
  g.add_property(n, "", {"", PgTypeKind::String});
  std::string text = serialize_pg(g);
  PropertyGraph back = parse_pg(text);
  EXPECT_TRUE(pg_equal(back, g));
  EXPECT_EQ(serialize_pg(back), text);
}

TEST(PgJson, ParseErrorsNameThePath) {
  std::string message;
  EXPECT_EQ(error_of([] { parse_pg("{}"); }), ErrorCode::FormatError);
  EXPECT_EQ(error_of([] { parse_pg("not json"); }), ErrorCode::FormatError);
  EXPECT_EQ(error_of([] { parse_pg(R"({"nodes": [], "edges": [], "extra": 1})"); }), ErrorCode::FormatError);
  EXPECT_EQ(error_of([&] { parse_pg(R"({"nodes": [{"id": 1, "label": 5, "properties": []}], "edges": []})"); },
                     &message),
            ErrorCode::FormatError);
  EXPECT_NE(message.find("$.nodes[0].label"), std::string::npos) << message;
  EXPECT_EQ(error_of([] {
              parse_pg(R"({"nodes": [{"id": 1, "label": "A", "properties": []},
                                     {"id": 1, "label": "B", "properties": []}], "edges": []})");
            }),
            ErrorCode::FormatError);
  EXPECT_EQ(error_of([] {
              parse_pg(R"({"nodes": [{"id": 1, "label": "A",
                                      "properties": [{"key": "k", "value": "v", "type": "Strin"}]}],
                           "edges": []})");
            }),
            ErrorCode::FormatError);
}

TEST(PgJson, DanglingEndpoint) {
  EXPECT_EQ(error_of([] {
              parse_pg(R"({"nodes": [{"id": 1, "label": "A", "properties": []}],
                           "edges": [{"id": 1, "label": "e", "source": 1, "target": 2, "properties": []}]})");
            }),
            ErrorCode::DanglingEdgeEndpoint);
}

TEST(PgSchemaJson, BadPsiReferences) {
  EXPECT_EQ(error_of([] {
              parse_pg_schema(R"({"node_types": [{"id": 0, "label": "A", "properties": [7]}],
                                  "edge_types": [], "property_types": []})");
            }),
            ErrorCode::FormatError);
  EXPECT_EQ(error_of([] {
              parse_pg_schema(R"({"node_types": [{"id": 0, "label": "A", "properties": [0]},
                                                 {"id": 1, "label": "B", "properties": [0]}],
                                  "edge_types": [],
                                  "property_types": [{"id": 0, "key": "k", "type": "String"}]})");
            }),
            ErrorCode::FormatError);
}

TEST(PgSchemaJson, Fig4RoundTrips) {
  PropertyGraphSchema s = testing::fig4_schema();
  std::string text = serialize_pg_schema(s);
  EXPECT_TRUE(pg_schema_equal(parse_pg_schema(text), s));
  EXPECT_EQ(serialize_pg_schema(parse_pg_schema(text)), text);
}

TEST(PgSchemaJson, GoldenGenericSchema) {
  EXPECT_EQ(serialize_pg_schema(generic_pg_schema()), testing::read_text(testing::docs_path("generic-pg-schema.json")));
}

TEST(PgJsonProperties, GeneratedGraphsAreByteStable) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    GeneratorConfig config;
    config.seed = case_seed(17, i);
    PropertyGraph g = gen_property_graph(config);
    std::string text = serialize_pg(g);
    PropertyGraph back = parse_pg(text);
    ASSERT_TRUE(pg_equal(back, g)) << "seed " << config.seed;
    ASSERT_EQ(serialize_pg(back), text) << "seed " << config.seed;
  }
}

TEST(PgJsonProperties, GeneratedSchemasAreByteStable) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    GeneratorConfig config;
    config.seed = case_seed(19, i);
    PropertyGraphSchema s = gen_pg_schema(config);
    std::string text = serialize_pg_schema(s);
    PropertyGraphSchema back = parse_pg_schema(text);
    ASSERT_TRUE(pg_schema_equal(back, s)) << "seed " << config.seed;
    ASSERT_EQ(serialize_pg_schema(back), text) << "seed " << config.seed;
  }
}

TEST(Cypher, Fig3Script) {
  std::string script = export_import_script(testing::fig3_graph());
  EXPECT_EQ(count(script, "CREATE (:"), 2u);
  EXPECT_EQ(count(script, "]->(b);"), 1u);
  EXPECT_NE(script.find("creation: date(\"2003-07-01\")"), std::string::npos) << script;
  EXPECT_NE(script.find("age: 46"), std::string::npos) << script;
  EXPECT_NE(script.find("[:ceo {since: "), std::string::npos) << script;
  EXPECT_TRUE(script.ends_with("MATCH (n) REMOVE n._pgid;\n"));
}

TEST(Cypher, EmptyGraphHasEmptyScript) { EXPECT_EQ(export_import_script(PropertyGraph()), ""); }

TEST(Cypher, EscapingAndFallbacks) {
  PropertyGraph g;
  NodeId n = g.add_node("http://ex.org/voc#A`B");
  g.add_property(n, "k", {"say \"hi\"\\\n", PgTypeKind::String});
  g.add_property(n, "bad", {"forty", PgTypeKind::Integer});
  g.add_property(n, "multi", {"1", PgTypeKind::Integer});
  g.add_property(n, "multi", {"2", PgTypeKind::Integer});
  g.add_property(n, "_pgid", {"clash", PgTypeKind::String});
  std::string script = export_import_script(g);
  EXPECT_NE(script.find("(:`http://ex.org/voc#A``B`"), std::string::npos) << script;
  EXPECT_NE(script.find(R"(k: "say \"hi\"\\\n")"), std::string::npos) << script;
  EXPECT_NE(script.find(R"(bad: "forty")"), std::string::npos) << script;
  EXPECT_NE(script.find("multi: [1, 2]"), std::string::npos) << script;
  EXPECT_NE(script.find("_pgid1: 0"), std::string::npos) << script;
  EXPECT_NE(script.find(R"(_pgid: "clash")"), std::string::npos) << script;
  EXPECT_EQ(count(script, "\n"), 2u);
}

}  // namespace
}  // namespace rdfpg
