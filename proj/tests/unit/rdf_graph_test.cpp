#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rdfpg/error.hpp"
#include "rdfpg/generator.hpp"
#include "rdfpg/turtle.hpp"

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

TEST(RdfGraph, InvariantsAreEnforcedByMutators) {
  RdfGraph g;
  RdfNodeId a = g.add_resource(ex("a"), voc("C"));
  RdfNodeId l = g.add_literal("x", vocab::xsd_string());
  EXPECT_EQ(error_of([&] { g.add_resource(ex("a"), voc("D")); }), ErrorCode::DuplicateElement);
  EXPECT_EQ(error_of([&] { g.add_literal("x", vocab::xsd_string()); }), ErrorCode::DuplicateElement);
  EXPECT_NO_THROW(g.add_literal("x", vocab::xsd_int()));
  EXPECT_EQ(error_of([&] { g.add_object_edge(a, voc("p"), l); }), ErrorCode::UnknownElement);
  EXPECT_EQ(error_of([&] { g.add_datatype_edge(a, voc("p"), a); }), ErrorCode::UnknownElement);
  EXPECT_EQ(error_of([&] { g.add_datatype_edge(l, voc("p"), l); }), ErrorCode::UnknownElement);
  EXPECT_TRUE(g.is_resource(a));
  EXPECT_TRUE(g.is_literal(l));
  EXPECT_NE(a, l);
}

TEST(BuildRdfGraph, Example1MatchesHandBuiltGraph) {
  // Resource nodes n1, n2; literal nodes n3..n6; one object edge and four
  // datatype edges.
  RdfGraph g = build_rdf_graph(testing::example1_triples());
  EXPECT_EQ(g.resources().size(), 2u);
  EXPECT_EQ(g.literals().size(), 4u);
  EXPECT_EQ(g.object_edges().size(), 1u);
  EXPECT_EQ(g.datatype_edges().size(), 4u);
  ASSERT_NE(g.find_resource(ex("Tesla_Inc")), nullptr);
  EXPECT_EQ(g.find_resource(ex("Tesla_Inc"))->klass, voc("Organisation"));
  EXPECT_NE(g.find_literal("46", vocab::xsd_int()), nullptr);
  EXPECT_EQ(g.find_literal("46", vocab::xsd_integer()), nullptr);
}

TEST(BuildRdfGraph, EmptyInputGivesEmptyGraph) { EXPECT_TRUE(build_rdf_graph(TripleSet()).empty()); }

TEST(BuildRdfGraph, UntypedResourcesGetRdfsResource) {
  TripleSet t;
  t.insert(make_triple(ex("a"), voc("p"), ex("b")));
  RdfGraph g = build_rdf_graph(t);
  EXPECT_EQ(g.find_resource(ex("a"))->klass, vocab::rdfs_resource());
  EXPECT_EQ(g.find_resource(ex("b"))->klass, vocab::rdfs_resource());
}

TEST(BuildRdfGraph, SharedLiteralsAreOneNode) {
  TripleSet t;
  t.insert(make_triple(ex("a"), voc("p"), Literal{"v", vocab::xsd_string()}));
  t.insert(make_triple(ex("b"), voc("q"), Literal{"v", vocab::xsd_string()}));
  t.insert(make_triple(ex("b"), voc("q"), Literal{"v", vocab::xsd_int()}));
  RdfGraph g = build_rdf_graph(t);
  EXPECT_EQ(g.literals().size(), 2u);
  EXPECT_EQ(g.datatype_edges().size(), 3u);
}

TEST(BuildRdfGraph, MultipleTypes) {
  TripleSet t;
  t.insert(make_triple(ex("a"), vocab::rdf_type(), voc("Z")));
  t.insert(make_triple(ex("a"), vocab::rdf_type(), voc("A")));
  EXPECT_EQ(error_of([&] { build_rdf_graph(t); }), ErrorCode::MultipleTypes);
  RdfGraph g = build_rdf_graph(t, {TypeSelection::Lexicographic});
  EXPECT_EQ(g.find_resource(ex("a"))->klass, voc("A"));
}

TEST(BuildRdfGraph, BlankNodesMustBeSkolemized) {
  TripleSet t;
  t.insert(Triple{BlankNode{"b"}, voc("p"), ex("o")});
  EXPECT_EQ(error_of([&] { build_rdf_graph(t); }), ErrorCode::BlankNodePresent);
  EXPECT_EQ(error_of([&] { build_rdf_schema(t); }), ErrorCode::BlankNodePresent);
  EXPECT_NO_THROW(build_rdf_graph(skolemize(t)));
}

TEST(BuildRdfSchema, Example2MatchesHandBuiltSchema) {
  // Classes Organisation, Person, xsd:date, xsd:string, xsd:int and five
  // property classes.
  RdfGraphSchema s = build_rdf_schema(testing::example2_triples());
  EXPECT_EQ(s.classes().size(), 5u);
  EXPECT_EQ(s.properties().size(), 5u);
  for (const Iri& c : {voc("Organisation"), voc("Person"), vocab::xsd_date(), vocab::xsd_string(), vocab::xsd_int()}) {
    EXPECT_NE(s.find_class(c), nullptr) << c.str();
  }
  for (const PropertyEdge& p : s.properties()) {
    if (p.iri == voc("ceo")) {
      EXPECT_EQ(s.class_node(p.domain).iri, voc("Organisation"));
      EXPECT_EQ(s.class_node(p.range).iri, voc("Person"));
    }
  }
}

TEST(BuildRdfSchema, PropertiesNeedDomainAndRange) {
  TripleSet t;
  t.insert(make_triple(voc("p"), vocab::rdf_type(), vocab::rdf_property()));
  t.insert(make_triple(voc("p"), vocab::rdfs_domain(), voc("C")));
  RdfGraphSchema s = build_rdf_schema(t);
  EXPECT_EQ(s.properties().size(), 0u);
  EXPECT_NE(s.find_class(voc("C")), nullptr);
}

TEST(BuildRdfSchema, ConflictsAndVocabularyMisuse) {
  TripleSet domains;
  domains.insert(make_triple(voc("p"), vocab::rdfs_domain(), voc("A")));
  domains.insert(make_triple(voc("p"), vocab::rdfs_domain(), voc("B")));
  EXPECT_EQ(error_of([&] { build_rdf_schema(domains); }), ErrorCode::ConflictingDomain);

  TripleSet ranges;
  ranges.insert(make_triple(voc("p"), vocab::rdfs_range(), voc("A")));
  ranges.insert(make_triple(voc("p"), vocab::rdfs_range(), vocab::xsd_string()));
  EXPECT_EQ(error_of([&] { build_rdf_schema(ranges); }), ErrorCode::ConflictingRange);

  TripleSet vocabulary;
  vocabulary.insert(make_triple(vocab::rdf_type(), vocab::rdf_type(), vocab::rdfs_class()));
  EXPECT_EQ(error_of([&] { build_rdf_schema(vocabulary); }), ErrorCode::VocabularyTermAsClass);

  TripleSet literal_range;
  literal_range.insert(make_triple(voc("p"), vocab::rdfs_range(), Literal{"x", vocab::xsd_string()}));
  EXPECT_EQ(error_of([&] { build_rdf_schema(literal_range); }), ErrorCode::InvalidIri);
}

TEST(CompletePartialSchema, AddsRdfsResourceForMissingEnds) {
  TripleSet t;
  t.insert(make_triple(voc("p"), vocab::rdf_type(), vocab::rdf_property()));
  t.insert(make_triple(voc("q"), vocab::rdfs_domain(), voc("C")));
  TripleSet c = complete_partial_schema(t);
  EXPECT_TRUE(c.contains(make_triple(voc("p"), vocab::rdfs_domain(), vocab::rdfs_resource())));
  EXPECT_TRUE(c.contains(make_triple(voc("p"), vocab::rdfs_range(), vocab::rdfs_resource())));
  EXPECT_TRUE(c.contains(make_triple(voc("q"), vocab::rdfs_range(), vocab::rdfs_resource())));
  EXPECT_FALSE(c.contains(make_triple(voc("q"), vocab::rdfs_domain(), vocab::rdfs_resource())));
  EXPECT_EQ(complete_partial_schema(c), c);
  TripleSet complete = testing::example2_triples();
  EXPECT_EQ(complete_partial_schema(complete), complete);
}

TEST(ValidateRdf, Example1IsValidAgainstExample2) {
  RdfDatabase db = testing::example_database();
  EXPECT_TRUE(validate_rdf(db.graph, db.schema).valid());
}

TEST(ValidateRdf, EachRuleFires) {
  RdfGraphSchema s = build_rdf_schema(testing::example2_triples());

  TripleSet wrong_class = testing::example1_triples();
  wrong_class.insert(make_triple(ex("X"), vocab::rdf_type(), voc("Robot")));
  ValidationReport r1 = validate_rdf(build_rdf_graph(wrong_class), s);
  EXPECT_TRUE(r1.has(Rule::R1));
  EXPECT_EQ(r1.count(Rule::R1), 1u);

  TripleSet wrong_edge = testing::example1_triples();
  wrong_edge.insert(make_triple(ex("Elon_Musk"), voc("ceo"), ex("Tesla_Inc")));
  ValidationReport r2 = validate_rdf(build_rdf_graph(wrong_edge), s);
  EXPECT_EQ(r2.count(Rule::R2), 1u);
  EXPECT_FALSE(r2.has(Rule::R1));

  TripleSet wrong_literal = testing::example1_triples();
  wrong_literal.insert(make_triple(ex("Tesla_Inc"), voc("creation"), Literal{"2003", vocab::xsd_string()}));
  ValidationReport r3 = validate_rdf(build_rdf_graph(wrong_literal), s);
  EXPECT_EQ(r3.count(Rule::R3), 1u);
}

TEST(ValidateRdf, EmptyGraphIsValidAgainstAnything) {
  EXPECT_TRUE(validate_rdf(RdfGraph(), RdfGraphSchema()).valid());
}

TEST(ToTriples, GraphRoundTripsThroughTriples) {
  TripleSet t = testing::example1_triples();
  EXPECT_EQ(rdf_graph_to_triples(build_rdf_graph(t)), t);
  TripleSet s = testing::example2_triples();
  RdfGraphSchema schema = build_rdf_schema(s);
  EXPECT_TRUE(rdf_equal(build_rdf_schema(rdf_schema_to_triples(schema)), schema));
}

TEST(RdfEqual, IgnoresIdsAndInsertionOrder) {
  RdfGraph a, b;
  RdfNodeId a1 = a.add_resource(ex("x"), voc("C"));
  RdfNodeId a2 = a.add_literal("v", vocab::xsd_string());
  a.add_datatype_edge(a1, voc("p"), a2);
  RdfNodeId b2 = b.add_literal("v", vocab::xsd_string());
  RdfNodeId b1 = b.add_resource(ex("x"), voc("C"));
  b.add_datatype_edge(b1, voc("p"), b2);
  EXPECT_TRUE(rdf_equal(a, b));
  b.add_literal("orphan", vocab::xsd_string());
  EXPECT_FALSE(rdf_equal(a, b));
}

TEST(RdfEqual, DistinguishesClassAndDatatype) {
  RdfGraph a, b;
  a.add_resource(ex("x"), voc("C"));
  b.add_resource(ex("x"), voc("D"));
  EXPECT_FALSE(rdf_equal(a, b));
  RdfGraph c, d;
  c.add_literal("46", vocab::xsd_int());
  d.add_literal("46", vocab::xsd_integer());
  EXPECT_FALSE(rdf_equal(c, d));
}

// Triple-set equality is an independent route to the same answer for graphs
// without orphan literals.
TEST(RdfEqual, AgreesWithTripleSetEquality) {
  std::vector<RdfDatabase> dbs;
  for (std::uint64_t i = 0; i < 40; ++i) {
    GeneratorConfig config;
    config.seed = case_seed(3, i % 20);
    dbs.push_back(gen_rdf_database(config));
  }
  for (std::size_t i = 0; i < dbs.size(); ++i) {
    for (std::size_t j = 0; j < dbs.size(); j += 7) {
      bool by_triples = rdf_graph_to_triples(dbs[i].graph) == rdf_graph_to_triples(dbs[j].graph);
      EXPECT_EQ(rdf_equal(dbs[i].graph, dbs[j].graph), by_triples) << i << " " << j;
      bool schema_by_triples = rdf_schema_to_triples(dbs[i].schema) == rdf_schema_to_triples(dbs[j].schema);
      EXPECT_EQ(rdf_equal(dbs[i].schema, dbs[j].schema), schema_by_triples) << i << " " << j;
    }
  }
}

}  // namespace
}  // namespace rdfpg
