#include "rdfpg/triples.hpp"

#include <algorithm>

namespace rdfpg {

Triple make_triple(Iri subject, Iri predicate, Iri object) {
  return Triple{std::move(subject), std::move(predicate), std::move(object)};
}

Triple make_triple(Iri subject, Iri predicate, Literal object) {
  return Triple{std::move(subject), std::move(predicate), std::move(object)};
}

bool PrefixMap::bind(std::string prefix, std::string ns) {
  auto [it, inserted] = bindings_.insert_or_assign(std::move(prefix), std::move(ns));
  return !inserted;
}

std::optional<std::string> PrefixMap::lookup(const std::string& prefix) const {
  auto it = bindings_.find(prefix);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_simple_local_name(std::string_view local) {
  if (local.empty()) return false;
  auto alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  };
  if (!alnum(local.front()) && local.front() != '_') return false;
  return std::all_of(local.begin(), local.end(),
                     [&](char c) { return alnum(c) || c == '_' || c == '-'; });
}

}  // namespace

std::optional<std::pair<std::string, std::string>> PrefixMap::compact(const Iri& iri) const {
  std::optional<std::pair<std::string, std::string>> best;
  std::size_t best_len = 0;
  for (const auto& [prefix, ns] : bindings_) {
    if (ns.empty() || ns.size() >= iri.str().size() || !iri.str().starts_with(ns)) continue;
    std::string local = iri.str().substr(ns.size());
    if (!is_simple_local_name(local)) continue;
    if (!best || ns.size() > best_len) {
      best = std::make_pair(prefix, std::move(local));
      best_len = ns.size();
    }
  }
  return best;
}

PrefixMap PrefixMap::standard() {
  PrefixMap map;
  map.bind("rdf", std::string(ns::rdf));
  map.bind("rdfs", std::string(ns::rdfs));
  map.bind("xsd", std::string(ns::xsd));
  return map;
}

void TripleSet::insert_all(const TripleSet& other) {
  triples_.insert(other.triples_.begin(), other.triples_.end());
}

bool TripleSet::has_blank_nodes() const {
  return std::any_of(triples_.begin(), triples_.end(), [](const Triple& t) {
    return std::holds_alternative<BlankNode>(t.subject) ||
           std::holds_alternative<BlankNode>(t.object);
  });
}

}  // namespace rdfpg
