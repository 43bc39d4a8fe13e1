#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rdfpg/dm2.hpp"
#include "rdfpg/error.hpp"
#include "rdfpg/generator.hpp"

namespace rdfpg {
namespace {

using testing::ex;
using testing::voc;

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::IoError;
}

PgValue s(const std::string& text) { return {text, PgTypeKind::String}; }

TEST(GenericSchema, HasFourLabelsAndSixStringProperties) {
  PropertyGraphSchema g = generic_pg_schema();
  std::set<std::string> labels;
  for (const NodeType& nt : g.node_types()) labels.insert(nt.label);
  for (const EdgeType& et : g.edge_types()) labels.insert(et.label);
  EXPECT_EQ(labels, (std::set<std::string>{"Resource", "Literal", "ObjectProperty", "DatatypeProperty"}));
  EXPECT_EQ(g.property_types().size(), 6u);
  for (const PropertyType& pt : g.property_types()) EXPECT_EQ(pt.datatype, PgDatatype(PgTypeKind::String));
  for (const EdgeType& et : g.edge_types()) {
    EXPECT_EQ(g.node_type(et.source).label, "Resource");
    EXPECT_EQ(g.node_type(et.target).label, et.label == "ObjectProperty" ? "Resource" : "Literal");
  }
  EXPECT_TRUE(pg_schema_equal(generic_pg_schema(), generic_pg_schema()));
}

// Expected graph for the running example; edge properties use the key "type".
PropertyGraph expected_example_graph() {
  PropertyGraph g;
  auto resource = [&](const std::string& local, const std::string& klass) {
    NodeId n = g.add_node("Resource");
    g.add_property(n, "iri", s(ex(local).str()));
    g.add_property(n, "type", s(voc(klass).str()));
    return n;
  };
  auto literal = [&](const std::string& value, const Iri& datatype) {
    NodeId n = g.add_node("Literal");
    g.add_property(n, "value", s(value));
    g.add_property(n, "type", s(datatype.str()));
    return n;
  };
  NodeId n1 = resource("Tesla_Inc", "Organisation");
  NodeId n2 = resource("Elon_Musk", "Person");
  NodeId n3 = literal("Tesla, Inc.", vocab::xsd_string());
  NodeId n4 = literal("2003-07-01", vocab::xsd_date());
  NodeId n5 = literal("Elon Musk", vocab::xsd_string());
  NodeId n6 = literal("46", vocab::xsd_int());
  auto edge = [&](const char* label, NodeId a, NodeId b, const std::string& property) {
    g.add_property(g.add_edge(label, a, b), "type", s(voc(property).str()));
  };
  edge("ObjectProperty", n1, n2, "ceo");
  edge("DatatypeProperty", n1, n3, "name");
  edge("DatatypeProperty", n1, n4, "creation");
  edge("DatatypeProperty", n2, n5, "birthName");
  edge("DatatypeProperty", n2, n6, "age");
  return g;
}

TEST(Im2, ExampleMatchesHandBuiltGraph) {
  PropertyGraph g = im2(testing::example_database().graph);
  EXPECT_EQ(g.nodes().size(), 6u);
  EXPECT_EQ(g.edges().size(), 5u);
  EXPECT_EQ(g.properties().size(), 17u);
  EXPECT_TRUE(pg_equal(g, expected_example_graph()));
}

TEST(Im2, SingleTriple) {
  TripleSet t;
  t.insert(make_triple(ex("a"), voc("p"), Literal{"x", vocab::xsd_string()}));
  PropertyGraph g = im2(build_rdf_graph(t));
  EXPECT_EQ(g.nodes().size(), 2u);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges().front().label, "DatatypeProperty");
  EXPECT_TRUE(im2(RdfGraph()).empty());
}

TEST(Dm2, AlwaysValidAgainstTheGenericSchema) {
  PgDatabase db = dm2(testing::example_database().graph);
  EXPECT_TRUE(pg_schema_equal(db.schema, generic_pg_schema()));
  EXPECT_TRUE(validate_pg(db.graph, db.schema).valid());
  EXPECT_TRUE(validate_pg(dm2(RdfGraph()).graph, generic_pg_schema()).valid());
}

TEST(Dm2, HandlesWhatDm1Rejects) {
  RdfGraph r;
  RdfNodeId a = r.add_resource(ex("a"), vocab::rdfs_resource());
  r.add_datatype_edge(a, voc("name"), r.add_literal("x", vocab::xsd_string()));
  r.add_datatype_edge(a, voc("name"), r.add_literal("x", vocab::xsd_int()));
  PgDatabase db = dm2(r);
  EXPECT_TRUE(validate_pg(db.graph, db.schema).valid());
  EXPECT_TRUE(rdf_equal(im2_inv(db.graph), r));
}

TEST(Im2Inverse, RecoversTheExample) {
  RdfGraph g = testing::example_database().graph;
  EXPECT_TRUE(rdf_equal(im2_inv(im2(g)), g));
  EXPECT_TRUE(im2_inv(PropertyGraph()).empty());
}

TEST(Im2Inverse, RejectsNonConformingGraphs) {
  PropertyGraph wrong_label;
  wrong_label.add_node("Thing");
  EXPECT_EQ(error_of([&] { im2_inv(wrong_label); }), ErrorCode::SchemaViolation);

  PropertyGraph extra;
  NodeId n = extra.add_node("Resource");
  extra.add_property(n, "iri", s(ex("a").str()));
  extra.add_property(n, "type", s(voc("C").str()));
  extra.add_property(n, "colour", s("red"));
  EXPECT_EQ(error_of([&] { im2_inv(extra); }), ErrorCode::SchemaViolation);

  PropertyGraph typed;
  NodeId t = typed.add_node("Literal");
  typed.add_property(t, "value", {"46", PgTypeKind::Integer});
  typed.add_property(t, "type", s(vocab::xsd_int().str()));
  EXPECT_EQ(error_of([&] { im2_inv(typed); }), ErrorCode::SchemaViolation);

  PropertyGraph backwards;
  NodeId r = backwards.add_node("Resource");
  backwards.add_property(r, "iri", s(ex("a").str()));
  backwards.add_property(r, "type", s(voc("C").str()));
  NodeId l = backwards.add_node("Literal");
  backwards.add_property(l, "value", s("x"));
  backwards.add_property(l, "type", s(vocab::xsd_string().str()));
  backwards.add_property(backwards.add_edge("DatatypeProperty", l, r), "type", s(voc("p").str()));
  EXPECT_EQ(error_of([&] { im2_inv(backwards); }), ErrorCode::SchemaViolation);
}

TEST(Im2Inverse, MissingOrRepeatedRequiredProperties) {
  PropertyGraph missing;
  missing.add_property(missing.add_node("Resource"), "iri", s(ex("a").str()));
  EXPECT_EQ(error_of([&] { im2_inv(missing); }), ErrorCode::MissingRequiredProperty);

  PropertyGraph repeated;
  NodeId n = repeated.add_node("Literal");
  repeated.add_property(n, "value", s("x"));
  repeated.add_property(n, "value", s("y"));
  repeated.add_property(n, "type", s(vocab::xsd_string().str()));
  EXPECT_EQ(error_of([&] { im2_inv(repeated); }), ErrorCode::MissingRequiredProperty);

  PropertyGraph untyped_edge;
  NodeId a = untyped_edge.add_node("Resource");
  untyped_edge.add_property(a, "iri", s(ex("a").str()));
  untyped_edge.add_property(a, "type", s(voc("C").str()));
  untyped_edge.add_edge("ObjectProperty", a, a);
  EXPECT_EQ(error_of([&] { im2_inv(untyped_edge); }), ErrorCode::MissingRequiredProperty);
}

TEST(Dm2Properties, CountsAndRoundTripOverGeneratedGraphs) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    GeneratorConfig config;
    config.seed = case_seed(13, i);
    RdfGraph r = gen_rdf_graph(config);
    PgDatabase db = dm2(r);
    std::size_t nodes = r.resources().size() + r.literals().size();
    std::size_t edges = r.object_edges().size() + r.datatype_edges().size();
    ASSERT_EQ(db.graph.nodes().size(), nodes);
    ASSERT_EQ(db.graph.edges().size(), edges);
    ASSERT_EQ(db.graph.properties().size(), 2 * nodes + edges);
    ASSERT_TRUE(validate_pg(db.graph, db.schema).valid());
    ASSERT_TRUE(rdf_equal(im2_inv(db.graph), r)) << "seed " << config.seed;
  }
}

}  // namespace
}  // namespace rdfpg
