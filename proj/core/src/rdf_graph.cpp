#include "rdfpg/rdf_graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "rdfpg/error.hpp"

namespace rdfpg {

// ---------------------------------------------------------------------------
// RdfGraph

RdfNodeId RdfGraph::add_resource(Iri iri, Iri klass) {
  if (by_iri_.contains(iri)) {
    throw Error(ErrorCode::DuplicateElement, "resource node for <" + iri.str() + "> already exists");
  }
  RdfNodeId id = next_node_++;
  by_iri_.emplace(iri, id);
  resource_index_.emplace(id, resources_.size());
  resources_.push_back(ResourceNode{id, std::move(iri), std::move(klass)});
  return id;
}

RdfNodeId RdfGraph::add_literal(std::string lexical, Iri datatype) {
  Literal key{lexical, datatype};
  if (by_literal_.contains(key)) {
    throw Error(ErrorCode::DuplicateElement,
                "literal node \"" + lexical + "\"^^<" + datatype.str() + "> already exists");
  }
  RdfNodeId id = next_node_++;
  by_literal_.emplace(std::move(key), id);
  literal_index_.emplace(id, literals_.size());
  literals_.push_back(LiteralNode{id, std::move(lexical), std::move(datatype)});
  return id;
}

RdfEdgeId RdfGraph::add_object_edge(RdfNodeId source, Iri property, RdfNodeId target) {
  if (!is_resource(source) || !is_resource(target)) {
    throw Error(ErrorCode::UnknownElement, "object edge endpoints must be resource nodes");
  }
  RdfEdgeId id = next_edge_++;
  object_edges_.push_back(RdfEdge{id, source, target, std::move(property)});
  return id;
}

RdfEdgeId RdfGraph::add_datatype_edge(RdfNodeId source, Iri property, RdfNodeId target) {
  if (!is_resource(source) || !is_literal(target)) {
    throw Error(ErrorCode::UnknownElement,
                "datatype edge must run from a resource node to a literal node");
  }
  RdfEdgeId id = next_edge_++;
  datatype_edges_.push_back(RdfEdge{id, source, target, std::move(property)});
  return id;
}

const ResourceNode* RdfGraph::find_resource(const Iri& iri) const {
  auto it = by_iri_.find(iri);
  return it == by_iri_.end() ? nullptr : &resources_[resource_index_.at(it->second)];
}

const LiteralNode* RdfGraph::find_literal(const std::string& lexical, const Iri& datatype) const {
  auto it = by_literal_.find(Literal{lexical, datatype});
  return it == by_literal_.end() ? nullptr : &literals_[literal_index_.at(it->second)];
}

const ResourceNode& RdfGraph::resource(RdfNodeId id) const {
  auto it = resource_index_.find(id);
  if (it == resource_index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no resource node " + std::to_string(id));
  }
  return resources_[it->second];
}

const LiteralNode& RdfGraph::literal(RdfNodeId id) const {
  auto it = literal_index_.find(id);
  if (it == literal_index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no literal node " + std::to_string(id));
  }
  return literals_[it->second];
}

// ---------------------------------------------------------------------------
// RdfGraphSchema

RdfNodeId RdfGraphSchema::add_class(Iri iri) {
  if (auto it = by_iri_.find(iri); it != by_iri_.end()) return it->second;
  if (vocab::is_schema_term(iri)) {
    throw Error(ErrorCode::VocabularyTermAsClass, "<" + iri.str() + "> cannot name a class");
  }
  RdfNodeId id = next_node_++;
  by_iri_.emplace(iri, id);
  index_.emplace(id, classes_.size());
  classes_.push_back(ClassNode{id, std::move(iri)});
  return id;
}

RdfEdgeId RdfGraphSchema::add_property(Iri iri, RdfNodeId domain, RdfNodeId range) {
  if (vocab::is_schema_term(iri)) {
    throw Error(ErrorCode::VocabularyTermAsClass, "<" + iri.str() + "> cannot name a property");
  }
  if (!index_.contains(domain) || !index_.contains(range)) {
    throw Error(ErrorCode::UnknownElement, "property <" + iri.str() + "> references a missing class");
  }
  RdfEdgeId id = next_edge_++;
  properties_.push_back(PropertyEdge{id, std::move(iri), domain, range});
  return id;
}

const ClassNode* RdfGraphSchema::find_class(const Iri& iri) const {
  auto it = by_iri_.find(iri);
  return it == by_iri_.end() ? nullptr : &classes_[index_.at(it->second)];
}

const ClassNode& RdfGraphSchema::class_node(RdfNodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownElement, "no class node " + std::to_string(id));
  }
  return classes_[it->second];
}

// ---------------------------------------------------------------------------
// Construction from triples

namespace {

const Iri* object_iri(const Triple& t) { return std::get_if<Iri>(&t.object); }

void reject_blank_nodes(const TripleSet& triples) {
  if (triples.has_blank_nodes()) {
    throw Error(ErrorCode::BlankNodePresent,
                "input contains blank nodes; skolemize it before building a graph");
  }
}

}  // namespace

RdfGraph build_rdf_graph(const TripleSet& triples, const GraphBuildOptions& options) {
  reject_blank_nodes(triples);

  std::map<Iri, std::set<Iri>> types;
  for (const Triple& t : triples) {
    const Iri* klass = object_iri(t);
    if (t.predicate == vocab::rdf_type() && klass != nullptr) {
      types[std::get<Iri>(t.subject)].insert(*klass);
    }
  }

  auto class_of = [&](const Iri& resource) -> Iri {
    auto it = types.find(resource);
    if (it == types.end()) return vocab::rdfs_resource();
    if (it->second.size() > 1 && options.types == TypeSelection::Strict) {
      std::string list;
      for (const Iri& c : it->second) list += " <" + c.str() + ">";
      throw Error(ErrorCode::MultipleTypes, "<" + resource.str() + "> has several rdf:type values:" + list);
    }
    return *it->second.begin();
  };

  RdfGraph graph;
  auto resource_node = [&](const Iri& iri) {
    if (const ResourceNode* node = graph.find_resource(iri)) return node->id;
    return graph.add_resource(iri, class_of(iri));
  };

  // Subjects first, in triple order, then IRIs that only occur as objects.
  for (const Triple& t : triples) resource_node(std::get<Iri>(t.subject));

  for (const Triple& t : triples) {
    const Iri& subject = std::get<Iri>(t.subject);
    if (const Iri* object = object_iri(t)) {
      if (t.predicate == vocab::rdf_type()) continue;
      graph.add_object_edge(resource_node(subject), t.predicate, resource_node(*object));
    } else {
      const auto& literal = std::get<Literal>(t.object);
      const LiteralNode* node = graph.find_literal(literal.lexical, literal.datatype);
      RdfNodeId target = node != nullptr ? node->id : graph.add_literal(literal.lexical, literal.datatype);
      graph.add_datatype_edge(resource_node(subject), t.predicate, target);
    }
  }
  return graph;
}

RdfGraphSchema build_rdf_schema(const TripleSet& triples) {
  reject_blank_nodes(triples);

  std::set<Iri> classes;
  std::map<Iri, Iri> domains;
  std::map<Iri, Iri> ranges;

  auto record = [](std::map<Iri, Iri>& into, const Iri& property, const Iri& klass, ErrorCode code,
                   const char* what) {
    auto [it, inserted] = into.emplace(property, klass);
    if (!inserted && it->second != klass) {
      throw Error(code, "<" + property.str() + "> declares two " + what + "s: <" + it->second.str() +
                            "> and <" + klass.str() + ">");
    }
  };

  for (const Triple& t : triples) {
    const Iri& subject = std::get<Iri>(t.subject);
    const bool is_domain = t.predicate == vocab::rdfs_domain();
    const bool is_range = t.predicate == vocab::rdfs_range();
    const bool is_class_decl = t.predicate == vocab::rdf_type() && std::holds_alternative<Iri>(t.object) &&
                               std::get<Iri>(t.object) == vocab::rdfs_class();
    if (!is_domain && !is_range && !is_class_decl) continue;

    if (is_class_decl) {
      classes.insert(subject);
      continue;
    }
    const Iri* klass = object_iri(t);
    if (klass == nullptr) {
      throw Error(ErrorCode::InvalidIri, "<" + subject.str() + "> has a literal as its " +
                                             (is_domain ? "domain" : "range"));
    }
    classes.insert(*klass);
    if (is_domain) {
      record(domains, subject, *klass, ErrorCode::ConflictingDomain, "domain");
    } else {
      record(ranges, subject, *klass, ErrorCode::ConflictingRange, "range");
    }
  }

  RdfGraphSchema schema;
  for (const Iri& c : classes) schema.add_class(c);
  for (const auto& [property, domain] : domains) {
    auto range = ranges.find(property);
    if (range == ranges.end()) continue;
    schema.add_property(property, schema.find_class(domain)->id, schema.find_class(range->second)->id);
  }
  return schema;
}

TripleSet complete_partial_schema(const TripleSet& triples) {
  std::set<Iri> properties;
  std::set<Iri> with_domain;
  std::set<Iri> with_range;
  for (const Triple& t : triples) {
    const Iri* subject = std::get_if<Iri>(&t.subject);
    if (subject == nullptr) continue;
    if (t.predicate == vocab::rdf_type() && std::holds_alternative<Iri>(t.object) &&
        std::get<Iri>(t.object) == vocab::rdf_property()) {
      properties.insert(*subject);
    } else if (t.predicate == vocab::rdfs_domain()) {
      properties.insert(*subject);
      with_domain.insert(*subject);
    } else if (t.predicate == vocab::rdfs_range()) {
      properties.insert(*subject);
      with_range.insert(*subject);
    }
  }

  TripleSet out = triples;
  for (const Iri& p : properties) {
    if (!with_domain.contains(p)) out.insert(make_triple(p, vocab::rdfs_domain(), vocab::rdfs_resource()));
    if (!with_range.contains(p)) out.insert(make_triple(p, vocab::rdfs_range(), vocab::rdfs_resource()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validity

ValidationReport validate_rdf(const RdfGraph& graph, const RdfGraphSchema& schema) {
  ValidationReport report;

  auto declared = [&](const Iri& klass) { return schema.find_class(klass) != nullptr; };
  for (const auto& r : graph.resources()) {
    if (!declared(r.klass)) {
      report.violations.push_back({Rule::R1, r.id,
                                   "resource <" + r.iri.str() + "> has undeclared class <" + r.klass.str() + ">"});
    }
  }
  for (const auto& l : graph.literals()) {
    if (!declared(l.datatype)) {
      report.violations.push_back({Rule::R1, l.id,
                                   "literal \"" + l.lexical + "\" has undeclared datatype <" +
                                       l.datatype.str() + ">"});
    }
  }

  std::multimap<Iri, const PropertyEdge*> by_property;
  for (const auto& p : schema.properties()) by_property.emplace(p.iri, &p);

  auto check_edge = [&](const RdfEdge& e, const Iri& source_class, const Iri& target_class, Rule rule) {
    auto [first, last] = by_property.equal_range(e.property);
    if (first == last) {
      report.violations.push_back({rule, e.id, "property <" + e.property.str() + "> is not declared"});
      return;
    }
    for (auto it = first; it != last; ++it) {
      if (schema.class_node(it->second->domain).iri == source_class &&
          schema.class_node(it->second->range).iri == target_class) {
        return;
      }
    }
    report.violations.push_back({rule, e.id,
                                 "<" + e.property.str() + "> from <" + source_class.str() + "> to <" +
                                     target_class.str() + "> does not match its declared domain/range"});
  };

  for (const auto& e : graph.object_edges()) {
    check_edge(e, graph.resource(e.source).klass, graph.resource(e.target).klass, Rule::R2);
  }
  for (const auto& e : graph.datatype_edges()) {
    check_edge(e, graph.resource(e.source).klass, graph.literal(e.target).datatype, Rule::R3);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Back to triples

TripleSet rdf_graph_to_triples(const RdfGraph& graph) {
  TripleSet out(PrefixMap::standard());
  for (const auto& r : graph.resources()) {
    if (r.klass != vocab::rdfs_resource()) out.insert(make_triple(r.iri, vocab::rdf_type(), r.klass));
  }
  for (const auto& e : graph.object_edges()) {
    out.insert(make_triple(graph.resource(e.source).iri, e.property, graph.resource(e.target).iri));
  }
  for (const auto& e : graph.datatype_edges()) {
    const auto& l = graph.literal(e.target);
    out.insert(make_triple(graph.resource(e.source).iri, e.property, Literal{l.lexical, l.datatype}));
  }
  return out;
}

TripleSet rdf_schema_to_triples(const RdfGraphSchema& schema) {
  TripleSet out(PrefixMap::standard());
  for (const auto& c : schema.classes()) {
    if (!vocab::is_datatype(c.iri)) out.insert(make_triple(c.iri, vocab::rdf_type(), vocab::rdfs_class()));
  }
  for (const auto& p : schema.properties()) {
    out.insert(make_triple(p.iri, vocab::rdf_type(), vocab::rdf_property()));
    out.insert(make_triple(p.iri, vocab::rdfs_domain(), schema.class_node(p.domain).iri));
    out.insert(make_triple(p.iri, vocab::rdfs_range(), schema.class_node(p.range).iri));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equality

namespace {

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct GraphKeys {
  std::vector<std::pair<Iri, Iri>> resources;
  std::vector<std::pair<std::string, Iri>> literals;
  std::vector<std::tuple<Iri, Iri, Iri>> object_edges;
  std::vector<std::tuple<Iri, Iri, std::string, Iri>> datatype_edges;

  friend bool operator==(const GraphKeys&, const GraphKeys&) = default;
};

GraphKeys keys_of(const RdfGraph& g) {
  GraphKeys k;
  // The IRI alone identifies a resource node and (lexical, datatype) a
  // literal node, so edges can be keyed by those.
  for (const auto& r : g.resources()) k.resources.emplace_back(r.iri, r.klass);
  for (const auto& l : g.literals()) k.literals.emplace_back(l.lexical, l.datatype);
  for (const auto& e : g.object_edges()) {
    k.object_edges.emplace_back(g.resource(e.source).iri, e.property, g.resource(e.target).iri);
  }
  for (const auto& e : g.datatype_edges()) {
    const auto& l = g.literal(e.target);
    k.datatype_edges.emplace_back(g.resource(e.source).iri, e.property, l.lexical, l.datatype);
  }
  k.resources = sorted(std::move(k.resources));
  k.literals = sorted(std::move(k.literals));
  k.object_edges = sorted(std::move(k.object_edges));
  k.datatype_edges = sorted(std::move(k.datatype_edges));
  return k;
}

}  // namespace

bool rdf_equal(const RdfGraph& a, const RdfGraph& b) { return keys_of(a) == keys_of(b); }

bool rdf_equal(const RdfGraphSchema& a, const RdfGraphSchema& b) {
  auto keys = [](const RdfGraphSchema& s) {
    std::vector<Iri> classes;
    for (const auto& c : s.classes()) classes.push_back(c.iri);
    std::vector<std::tuple<Iri, Iri, Iri>> properties;
    for (const auto& p : s.properties()) {
      properties.emplace_back(s.class_node(p.domain).iri, p.iri, s.class_node(p.range).iri);
    }
    return std::make_pair(sorted(std::move(classes)), sorted(std::move(properties)));
  };
  return keys(a) == keys(b);
}

bool rdf_equal(const RdfDatabase& a, const RdfDatabase& b) {
  return rdf_equal(a.schema, b.schema) && rdf_equal(a.graph, b.graph);
}

}  // namespace rdfpg
