#include "rdfpg/generator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "rdfpg/datatype_map.hpp"

namespace rdfpg {

namespace {

constexpr std::string_view kVoc = "http://example.org/voc/";
constexpr std::string_view kRes = "http://example.org/res/";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    if (n == 0) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  std::size_t upto(std::size_t n) { return below(n + 1); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  double unit() { return std::uniform_real_distribution<double>(0, 1)(engine_); }
  long long between(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

Iri voc(std::string_view local, std::size_t i) { return Iri(std::string(kVoc) + std::string(local) + std::to_string(i)); }
Iri res(std::string_view local, std::size_t i) { return Iri(std::string(kRes) + std::string(local) + std::to_string(i)); }

std::string pad(long long value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

// Strings that stress escaping: quotes, backslashes, control characters and
// multi-byte UTF-8.
std::string random_text(Rng& rng) {
  static const std::vector<std::string> pieces = {
      "Tesla", "Inc.", " ", ",", "\"", "\\", "\n", "\t", "\r", "'", "caf\xC3\xA9", "\xE6\x97\xA5\xE6\x9C\xAC",
      "\xF0\x9F\x9A\x80", "a", "Z", "0", "{", "}", "<", ">", "#", "@", ":", "\x01", ";", ".", "^^"};
  std::string out;
  for (std::size_t n = rng.upto(5); n > 0; --n) out += rng.pick(pieces);
  return out;
}

std::string random_lexical(Rng& rng, const Iri& datatype) {
  const std::string& dt = datatype.str();
  auto is = [&](const Iri& other) { return dt == other.str(); };
  if (is(vocab::xsd_integer())) return std::to_string(rng.between(-100000, 100000));
  if (is(vocab::xsd_int())) return std::to_string(rng.between(-2147483648LL, 2147483647LL));
  if (is(vocab::xsd_decimal())) return std::to_string(rng.between(-999, 999)) + "." + pad(rng.between(0, 99), 2);
  if (is(vocab::xsd_double())) return std::to_string(rng.between(1, 9)) + "." + std::to_string(rng.between(0, 9)) + "E" + std::to_string(rng.between(-5, 5));
  if (is(vocab::xsd_boolean())) return rng.chance(0.5) ? "true" : "false";
  if (is(vocab::xsd_date())) {
    return pad(rng.between(1900, 2030), 4) + "-" + pad(rng.between(1, 12), 2) + "-" + pad(rng.between(1, 28), 2);
  }
  if (is(vocab::xsd_date_time())) {
    return pad(rng.between(1900, 2030), 4) + "-" + pad(rng.between(1, 12), 2) + "-" + pad(rng.between(1, 28), 2) +
           "T" + pad(rng.between(0, 23), 2) + ":" + pad(rng.between(0, 59), 2) + ":" + pad(rng.between(0, 59), 2) + "Z";
  }
  if (dt == std::string(ns::xsd) + "gYear") return pad(rng.between(1900, 2030), 4);
  return random_text(rng);
}

// Datatypes for the schema-free generators: the pool plus one IRI outside
// the XML Schema namespace.
std::vector<Iri> wide_datatypes(const GeneratorConfig& config) {
  std::vector<Iri> out = config.datatype_pool;
  out.emplace_back("http://example.org/dt/celsius");
  if (out.size() == 1) out.push_back(vocab::xsd_string());
  return out;
}

}  // namespace

std::vector<Iri> GeneratorConfig::default_datatype_pool() {
  return {vocab::xsd_string(), vocab::xsd_integer(), vocab::xsd_int(),     vocab::xsd_decimal(),
          vocab::xsd_double(), vocab::xsd_boolean(), vocab::xsd_date(),    vocab::xsd_date_time(),
          Iri(std::string(ns::xsd) + "gYear")};
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RdfDatabase gen_rdf_database(const GeneratorConfig& config) {
  Rng rng(config.seed);
  TripleSet schema_triples(PrefixMap::standard());
  TripleSet instance_triples(PrefixMap::standard());

  std::size_t class_count = rng.upto(config.max_classes);
  std::vector<Iri> classes;
  for (std::size_t i = 0; i < class_count; ++i) {
    classes.push_back(voc("C", i));
    schema_triples.insert(make_triple(classes.back(), vocab::rdf_type(), vocab::rdfs_class()));
  }

  struct Declared {
    Iri iri;
    Iri domain;
    Iri range;
  };
  std::vector<Declared> properties;
  std::size_t property_count = classes.empty() ? 0 : rng.upto(config.max_properties);
  for (std::size_t i = 0; i < property_count; ++i) {
    Iri range;
    double roll = rng.unit();
    if (roll < 0.5 && !config.datatype_pool.empty()) {
      range = rng.pick(config.datatype_pool);
    } else if (roll < 0.9) {
      range = rng.pick(classes);
    } else {
      range = vocab::rdfs_resource();
    }
    properties.push_back({voc("p", i), rng.pick(classes), range});
    const Declared& p = properties.back();
    schema_triples.insert(make_triple(p.iri, vocab::rdf_type(), vocab::rdf_property()));
    schema_triples.insert(make_triple(p.iri, vocab::rdfs_domain(), p.domain));
    schema_triples.insert(make_triple(p.iri, vocab::rdfs_range(), p.range));
  }

  std::size_t resource_count = classes.empty() ? 0 : std::min(rng.upto(config.max_resources), config.max_triples);
  std::vector<Iri> resources;
  std::map<Iri, std::vector<Iri>> by_class;
  std::map<Iri, Iri> class_of;
  for (std::size_t i = 0; i < resource_count; ++i) {
    Iri r = res("r", i);
    Iri klass = rng.pick(classes);
    instance_triples.insert(make_triple(r, vocab::rdf_type(), klass));
    resources.push_back(r);
    by_class[klass].push_back(r);
    class_of.emplace(r, klass);
  }

  std::map<Iri, std::vector<Literal>> literals;
  std::vector<Iri> untyped;
  std::set<std::pair<Iri, Iri>> valued;
  std::size_t budget = config.max_triples - resource_count;
  for (std::size_t attempt = 0; attempt < 4 * budget && instance_triples.size() < config.max_triples; ++attempt) {
    if (resources.empty() || properties.empty()) break;
    const Iri& subject = rng.pick(resources);
    std::vector<const Declared*> applicable;
    for (const Declared& p : properties) {
      if (p.domain == class_of.at(subject)) applicable.push_back(&p);
    }
    if (applicable.empty()) continue;
    const Declared& p = *rng.pick(applicable);

    if (vocab::is_datatype(p.range)) {
      if (!valued.emplace(subject, p.iri).second) continue;
      auto& pool = literals[p.range];
      Literal value;
      if (!pool.empty() && rng.chance(0.3)) {
        value = rng.pick(pool);
      } else {
        value = Literal{random_lexical(rng, p.range), p.range};
        pool.push_back(value);
      }
      instance_triples.insert(make_triple(subject, p.iri, std::move(value)));
    } else if (p.range == vocab::rdfs_resource()) {
      if (untyped.empty() || rng.chance(0.5)) untyped.push_back(res("u", untyped.size()));
      instance_triples.insert(make_triple(subject, p.iri, rng.pick(untyped)));
    } else {
      auto it = by_class.find(p.range);
      if (it == by_class.end()) continue;
      instance_triples.insert(make_triple(subject, p.iri, rng.pick(it->second)));
    }
  }

  return RdfDatabase{build_rdf_schema(schema_triples), build_rdf_graph(instance_triples)};
}

RdfGraph gen_rdf_graph(const GeneratorConfig& config) {
  Rng rng(config.seed);
  RdfGraph graph;
  std::vector<Iri> datatypes = wide_datatypes(config);

  std::vector<Iri> classes{vocab::rdfs_resource()};
  for (std::size_t i = 0, n = rng.upto(config.max_classes); i < n; ++i) classes.push_back(voc("C", i));
  std::vector<Iri> properties;
  for (std::size_t i = 0, n = 1 + rng.upto(config.max_properties); i < n; ++i) properties.push_back(voc("p", i));

  std::vector<RdfNodeId> resources;
  for (std::size_t i = 0, n = rng.upto(config.max_resources); i < n; ++i) {
    resources.push_back(graph.add_resource(res("r", i), rng.pick(classes)));
  }

  std::vector<RdfNodeId> literals;
  for (std::size_t i = 0, n = rng.upto(config.max_resources); i < n; ++i) {
    std::string lexical = random_lexical(rng, rng.pick(datatypes));
    // The same lexical form under several datatypes.
    for (std::size_t copies = rng.chance(0.3) ? 2 : 1; copies > 0; --copies) {
      Iri dt = rng.pick(datatypes);
      if (graph.find_literal(lexical, dt) == nullptr) literals.push_back(graph.add_literal(lexical, dt));
    }
  }

  std::set<std::tuple<RdfNodeId, Iri, RdfNodeId>> edges;
  for (std::size_t attempt = 0, n = rng.upto(config.max_triples); attempt < n; ++attempt) {
    if (resources.empty()) break;
    RdfNodeId source = rng.pick(resources);
    // Few properties relative to edges, so subjects end up multi-valued.
    const Iri& property = rng.pick(properties);
    bool to_literal = !literals.empty() && rng.chance(0.5);
    RdfNodeId target = to_literal ? rng.pick(literals) : rng.pick(resources);
    if (!edges.emplace(source, property, target).second) continue;
    if (to_literal) {
      graph.add_datatype_edge(source, property, target);
    } else {
      graph.add_object_edge(source, property, target);
    }
  }
  return graph;
}

TripleSet gen_triple_set(const GeneratorConfig& config) {
  Rng rng(config.seed);
  PrefixMap prefixes = PrefixMap::standard();
  static const std::vector<std::pair<std::string, std::string>> candidates = {
      {"ex", "http://example.org/"},       {"voc", std::string(kVoc)},  {"res", std::string(kRes)},
      {"", "http://example.org/default#"}, {"a1", "urn:x-test:"},        {"foaf", "http://xmlns.com/foaf/0.1/"}};
  for (const auto& [prefix, ns] : candidates) {
    if (rng.chance(0.5)) prefixes.bind(prefix, ns);
  }
  TripleSet out(prefixes);

  static const std::vector<std::string> locals = {"a", "b", "Person", "name", "x-y", "_z", "9lives", "caf\xC3\xA9",
                                                  "with.dot", "trailing.", "q?x=1", "a#b", "sp{a}ce", "p|q",
                                                  "back\\slash", "quote\"d", "hat^", "tick`"};
  static const std::vector<std::string> namespaces = {
      "http://example.org/", std::string(kVoc), std::string(kRes), "http://example.org/default#", "urn:x-test:",
      "http://other.example/path/"};
  auto iri = [&]() { return Iri(rng.pick(namespaces) + rng.pick(locals)); };
  std::vector<Iri> datatypes = wide_datatypes(config);

  for (std::size_t i = 0, n = rng.upto(config.max_triples); i < n; ++i) {
    Iri subject = iri();
    double roll = rng.unit();
    if (roll < 0.2) {
      out.insert(make_triple(subject, vocab::rdf_type(), iri()));
    } else if (roll < 0.5) {
      out.insert(make_triple(subject, iri(), iri()));
    } else {
      const Iri& dt = rng.pick(datatypes);
      out.insert(make_triple(subject, iri(), Literal{random_lexical(rng, dt), dt}));
    }
  }
  return out;
}

PropertyGraph gen_property_graph(const GeneratorConfig& config) {
  Rng rng(config.seed);
  static const std::vector<std::string> labels = {"Person", "Organisation", "http://example.org/voc/C1",
                                                  "has space", "back`tick", "caf\xC3\xA9", "ceo", "x"};
  static const std::vector<std::string> keys = {"name", "age", "iri", "type", "with space", "k`ey", "_pgid", "v"};
  std::vector<PgDatatype> types = {PgTypeKind::String, PgTypeKind::Integer, PgTypeKind::Int,  PgTypeKind::Decimal,
                                   PgTypeKind::Double, PgTypeKind::Boolean, PgTypeKind::Date, PgTypeKind::DateTime,
                                   PgDatatype::custom(Iri("http://example.org/dt/celsius"))};
  auto value = [&]() {
    PgDatatype t = rng.pick(types);
    return PgValue{random_lexical(rng, to_rdf_datatype(t)), t};
  };

  PropertyGraph graph;
  std::vector<NodeId> nodes;
  for (std::size_t i = 0, n = rng.upto(config.max_resources); i < n; ++i) {
    NodeId node = graph.add_node(rng.pick(labels));
    for (std::size_t j = 0, m = rng.upto(4); j < m; ++j) graph.add_property(node, rng.pick(keys), value());
    // Keeps canonical node keys unique.
    graph.add_property(node, "n", PgValue{std::to_string(i), PgTypeKind::Integer});
    nodes.push_back(node);
  }
  for (std::size_t i = 0, n = nodes.empty() ? 0 : rng.upto(config.max_triples); i < n; ++i) {
    EdgeId edge = graph.add_edge(rng.pick(labels), rng.pick(nodes), rng.pick(nodes));
    for (std::size_t j = 0, m = rng.upto(2); j < m; ++j) graph.add_property(edge, rng.pick(keys), value());
  }
  return graph;
}

PropertyGraphSchema gen_pg_schema(const GeneratorConfig& config) {
  Rng rng(config.seed);
  std::vector<PgDatatype> types = {PgTypeKind::String, PgTypeKind::Integer, PgTypeKind::Int,  PgTypeKind::Decimal,
                                   PgTypeKind::Double, PgTypeKind::Boolean, PgTypeKind::Date, PgTypeKind::DateTime,
                                   PgDatatype::custom(Iri("http://example.org/dt/celsius"))};
  static const std::vector<std::string> keys = {"name", "age", "iri", "since", "with space", "caf\xC3\xA9"};

  PropertyGraphSchema schema;
  std::vector<NodeTypeId> node_types;
  for (std::size_t i = 0, n = rng.upto(config.max_classes); i < n; ++i) {
    std::string label = rng.chance(0.2) ? "Type " + std::to_string(i) : std::string(kVoc) + "C" + std::to_string(i);
    NodeTypeId nt = schema.add_node_type(std::move(label));
    for (std::size_t j = 0, m = rng.upto(3); j < m; ++j) schema.add_property_type(nt, rng.pick(keys), rng.pick(types));
    node_types.push_back(nt);
  }
  for (std::size_t i = 0, n = node_types.empty() ? 0 : rng.upto(config.max_properties); i < n; ++i) {
    EdgeTypeId et = schema.add_edge_type(std::string(kVoc) + "e" + std::to_string(rng.below(4)), rng.pick(node_types),
                                         rng.pick(node_types));
    for (std::size_t j = 0, m = rng.upto(2); j < m; ++j) schema.add_property_type(et, rng.pick(keys), rng.pick(types));
  }
  for (std::size_t j = 0, m = rng.upto(2); j < m; ++j) schema.add_property_type(rng.pick(keys), rng.pick(types));
  return schema;
}

}  // namespace rdfpg
