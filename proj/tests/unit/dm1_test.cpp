#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rdfpg/dm1.hpp"
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

std::string v(const std::string& local) { return voc(local).str(); }

// Expected PG schema for the running example, with voc:age typed Int
// because the example schema declares xsd:int.
PropertyGraphSchema expected_schema() {
  PropertyGraphSchema s;
  NodeTypeId org = s.add_node_type(v("Organisation"));
  NodeTypeId person = s.add_node_type(v("Person"));
  s.add_edge_type(v("ceo"), org, person);
  s.add_property_type(org, v("creation"), PgTypeKind::Date);
  s.add_property_type(org, v("name"), PgTypeKind::String);
  s.add_property_type(person, v("birthName"), PgTypeKind::String);
  s.add_property_type(person, v("age"), PgTypeKind::Int);
  return s;
}

PropertyGraph expected_graph() {
  PropertyGraph g;
  NodeId n1 = g.add_node(v("Organisation"));
  g.add_property(n1, "iri", {ex("Tesla_Inc").str(), PgTypeKind::String});
  g.add_property(n1, v("name"), {"Tesla, Inc.", PgTypeKind::String});
  g.add_property(n1, v("creation"), {"2003-07-01", PgTypeKind::Date});
  NodeId n2 = g.add_node(v("Person"));
  g.add_property(n2, "iri", {ex("Elon_Musk").str(), PgTypeKind::String});
  g.add_property(n2, v("birthName"), {"Elon Musk", PgTypeKind::String});
  g.add_property(n2, v("age"), {"46", PgTypeKind::Int});
  g.add_edge(v("ceo"), n1, n2);
  return g;
}

TEST(Sm1, ExampleSchemaMatchesHandBuilt) {
  PropertyGraphSchema s = sm1(testing::example_database().schema);
  EXPECT_EQ(s.node_types().size(), 2u);
  EXPECT_EQ(s.edge_types().size(), 1u);
  EXPECT_EQ(s.property_types().size(), 4u);
  const NodeType* org = s.find_node_type(v("Organisation"));
  ASSERT_NE(org, nullptr);
  bool creation_is_date = false;
  for (PropertyTypeId id : org->properties) {
    const PropertyType& pt = s.property_type(id);
    if (pt.label == v("creation")) creation_is_date = pt.datatype == PgDatatype(PgTypeKind::Date);
  }
  EXPECT_TRUE(creation_is_date);
  const EdgeType& ceo = s.edge_types().front();
  EXPECT_EQ(s.node_type(ceo.source).label, v("Organisation"));
  EXPECT_EQ(s.node_type(ceo.target).label, v("Person"));
  EXPECT_TRUE(pg_schema_equal(s, expected_schema()));
}

TEST(Sm1, EmptySchema) { EXPECT_TRUE(sm1(RdfGraphSchema()).empty()); }

TEST(Sm1, UnsupportedDatatypeBecomesCustom) {
  RdfGraphSchema s;
  RdfNodeId c = s.add_class(voc("Event"));
  Iri g_year("http://www.w3.org/2001/XMLSchema#gYear");
  s.add_property(voc("year"), c, s.add_class(g_year));
  PropertyGraphSchema p = sm1(s);
  ASSERT_EQ(p.property_types().size(), 1u);
  EXPECT_EQ(p.property_types().front().datatype, PgDatatype::custom(g_year));
}

TEST(Sm1, RdfsResourceIsAnOrdinaryNodeType) {
  RdfGraphSchema s;
  s.add_property(voc("knows"), s.add_class(voc("Person")), s.add_class(vocab::rdfs_resource()));
  PropertyGraphSchema p = sm1(s);
  EXPECT_NE(p.find_node_type(vocab::rdfs_resource().str()), nullptr);
  EXPECT_EQ(p.edge_types().size(), 1u);
}

TEST(Sm1, DatatypeDomainHasNoNodeType) {
  RdfGraphSchema s;
  s.add_property(voc("p"), s.add_class(vocab::xsd_string()), s.add_class(voc("C")));
  EXPECT_EQ(error_of([&] { sm1(s); }), ErrorCode::MissingEndpointType);
}

TEST(Im1, ExampleGraphMatchesHandBuilt) {
  PropertyGraph g = im1(testing::example_database().graph);
  EXPECT_EQ(g.nodes().size(), 2u);
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.properties().size(), 6u);
  EXPECT_TRUE(pg_equal(g, expected_graph()));
}

TEST(Im1, LoneResourceHasOnlyItsIri) {
  RdfGraph r;
  r.add_resource(ex("a"), voc("C"));
  PropertyGraph g = im1(r);
  ASSERT_EQ(g.nodes().size(), 1u);
  ASSERT_EQ(g.properties().size(), 1u);
  EXPECT_EQ(g.properties().front().label, "iri");
  EXPECT_TRUE(im1(RdfGraph()).empty());
}

TEST(Im1, MultiValuedPropertyIsRejected) {
  RdfGraph r;
  RdfNodeId a = r.add_resource(ex("a"), voc("C"));
  r.add_datatype_edge(a, voc("name"), r.add_literal("x", vocab::xsd_string()));
  r.add_datatype_edge(a, voc("name"), r.add_literal("y", vocab::xsd_string()));
  EXPECT_EQ(error_of([&] { im1(r); }), ErrorCode::DuplicatePropertyLabel);
}

TEST(Dm1, ReportsBothSides) {
  Dm1Result r = dm1(testing::example_database());
  EXPECT_TRUE(r.source_report.valid());
  EXPECT_TRUE(r.target_report.valid());
  EXPECT_TRUE(pg_schema_equal(r.database.schema, expected_schema()));
  EXPECT_TRUE(pg_equal(r.database.graph, expected_graph()));
}

TEST(Dm1, InvalidSourceStillMaps) {
  RdfDatabase db = testing::example_database();
  db.graph.add_resource(ex("Robby"), voc("Robot"));
  Dm1Result r = dm1(db);
  EXPECT_TRUE(r.source_report.has(Rule::R1));
  EXPECT_TRUE(r.target_report.has(Rule::P1a));
}

TEST(Dm1, IsDeterministic) {
  Dm1Result a = dm1(testing::example_database());
  Dm1Result b = dm1(testing::example_database());
  EXPECT_TRUE(pg_equal(a.database.graph, b.database.graph));
  EXPECT_TRUE(pg_schema_equal(a.database.schema, b.database.schema));
}

TEST(Dm1Inverse, RecoversTheExample) {
  RdfDatabase db = testing::example_database();
  RdfDatabase back = dm1_inv(dm1(db).database);
  EXPECT_TRUE(rdf_equal(back.schema, db.schema));
  EXPECT_TRUE(rdf_equal(back.graph, db.graph));
  EXPECT_TRUE(rdf_equal(back, db));
}

TEST(Dm1Inverse, EmptyDatabase) {
  RdfDatabase back = dm1_inv(PgDatabase{});
  EXPECT_TRUE(back.schema.empty());
  EXPECT_TRUE(back.graph.empty());
}

TEST(Dm1Inverse, EdgePropertyTypesAreIgnored) {
  PropertyGraphSchema s;
  NodeTypeId a = s.add_node_type(v("A"));
  EdgeTypeId e = s.add_edge_type(v("e"), a, a);
  s.add_property_type(e, v("since"), PgTypeKind::Date);
  RdfGraphSchema r = sm1_inv(s);
  EXPECT_EQ(r.properties().size(), 1u);
}

TEST(Im1Inverse, RequiresExactlyOneIri) {
  PropertyGraph none;
  none.add_node(v("C"));
  EXPECT_EQ(error_of([&] { im1_inv(none); }), ErrorCode::MissingIriProperty);
  PropertyGraph two;
  NodeId n = two.add_node(v("C"));
  two.add_property(n, "iri", {ex("a").str(), PgTypeKind::String});
  two.add_property(n, "iri", {ex("b").str(), PgTypeKind::String});
  EXPECT_EQ(error_of([&] { im1_inv(two); }), ErrorCode::MissingIriProperty);
}

TEST(Im1Inverse, LabelsAndIrisMustBeIris) {
  PropertyGraph bad_label;
  bad_label.add_property(bad_label.add_node("Person"), "iri", {ex("a").str(), PgTypeKind::String});
  EXPECT_EQ(error_of([&] { im1_inv(bad_label); }), ErrorCode::NonIriLabel);

  PropertyGraph bad_iri;
  bad_iri.add_property(bad_iri.add_node(v("C")), "iri", {"not an iri", PgTypeKind::String});
  EXPECT_EQ(error_of([&] { im1_inv(bad_iri); }), ErrorCode::NonIriLabel);

  PropertyGraph bad_key;
  NodeId n = bad_key.add_node(v("C"));
  bad_key.add_property(n, "iri", {ex("a").str(), PgTypeKind::String});
  bad_key.add_property(n, "name", {"x", PgTypeKind::String});
  EXPECT_EQ(error_of([&] { im1_inv(bad_key); }), ErrorCode::NonIriLabel);
}

TEST(Im1Inverse, EdgePropertiesHaveNoRdfCounterpart) {
  PropertyGraph g = expected_graph();
  g.add_property(g.edges().front().id, v("since"), {"2003", PgTypeKind::Date});
  EXPECT_EQ(error_of([&] { im1_inv(g); }), ErrorCode::UnsupportedEdgeProperty);
}

TEST(Im1Inverse, SharedValuesBecomeOneLiteral) {
  PropertyGraph g;
  for (const char* r : {"a", "b"}) {
    NodeId n = g.add_node(v("C"));
    g.add_property(n, "iri", {ex(r).str(), PgTypeKind::String});
    g.add_property(n, v("p"), {"same", PgTypeKind::String});
  }
  RdfGraph back = im1_inv(g);
  EXPECT_EQ(back.literals().size(), 1u);
  EXPECT_EQ(back.datatype_edges().size(), 2u);
}

// Structural properties over the generator corpus.
TEST(Dm1Properties, NoEdgePropertiesAndNoEdgePropertyTypes) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    GeneratorConfig config;
    config.seed = case_seed(11, i);
    Dm1Result r = dm1(gen_rdf_database(config));
    for (const PgEdge& e : r.database.graph.edges()) ASSERT_TRUE(e.properties.empty());
    for (const EdgeType& et : r.database.schema.edge_types()) ASSERT_TRUE(et.properties.empty());
    ASSERT_TRUE(r.target_report.valid()) << format_report(r.target_report);
  }
}

}  // namespace
}  // namespace rdfpg
