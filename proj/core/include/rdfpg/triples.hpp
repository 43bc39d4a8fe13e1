#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "rdfpg/vocabulary.hpp"

namespace rdfpg {

/// A blank node label as written in a document (without the `_:`).
/// Only present between a raw parse and skolemization.
struct BlankNode {
  std::string label;

  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
  friend bool operator==(const BlankNode&, const BlankNode&) = default;
};

using Subject = std::variant<Iri, BlankNode>;
using Object = std::variant<Iri, Literal, BlankNode>;

struct Triple {
  Subject subject;
  Iri predicate;
  Object object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple make_triple(Iri subject, Iri predicate, Iri object);
Triple make_triple(Iri subject, Iri predicate, Literal object);

/// prefix -> namespace IRI. Expansion is plain concatenation.
class PrefixMap {
 public:
  /// Returns true when an existing binding was replaced.
  bool bind(std::string prefix, std::string ns);
  std::optional<std::string> lookup(const std::string& prefix) const;
  const std::map<std::string, std::string>& bindings() const { return bindings_; }

  /// Longest namespace that is a proper prefix of `iri` and leaves a local
  /// name the Turtle writer can emit unescaped.
  std::optional<std::pair<std::string, std::string>> compact(const Iri& iri) const;

  /// rdf, rdfs and xsd.
  static PrefixMap standard();

  friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

 private:
  std::map<std::string, std::string> bindings_;
};

/// A set of RDF triples plus the prefixes that were in scope when it was
/// read. Duplicate triples collapse.
class TripleSet {
 public:
  TripleSet() = default;
  explicit TripleSet(PrefixMap prefixes) : prefixes_(std::move(prefixes)) {}

  bool insert(Triple triple) { return triples_.insert(std::move(triple)).second; }
  void insert_all(const TripleSet& other);
  bool contains(const Triple& triple) const { return triples_.contains(triple); }

  const std::set<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  PrefixMap& prefixes() { return prefixes_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  bool has_blank_nodes() const;

  /// Set equality on triples; prefixes are presentation only.
  friend bool operator==(const TripleSet& a, const TripleSet& b) {
    return a.triples_ == b.triples_;
  }

 private:
  std::set<Triple> triples_;
  PrefixMap prefixes_;
};

}  // namespace rdfpg
