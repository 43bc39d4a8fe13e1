#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace rdfpg {

/// An absolute IRI in full (never prefixed) form.
///
/// The structural requirements enforced are a scheme ("http:", "urn:", ...)
/// and no whitespace; equality is byte equality.
class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value);

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Iri&, const Iri&) = default;
  friend bool operator==(const Iri&, const Iri&) = default;

  /// True when `text` would be accepted by the constructor.
  static bool is_valid(std::string_view text) noexcept;

 private:
  std::string value_;
};

/// An RDF literal: lexical form plus datatype IRI. Plain literals carry
/// xsd:string.
struct Literal {
  std::string lexical;
  Iri datatype;

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

namespace vocab {
const Iri& rdf_type();
const Iri& rdf_property();
const Iri& rdfs_class();
const Iri& rdfs_domain();
const Iri& rdfs_range();
const Iri& rdfs_resource();
const Iri& rdfs_literal();

const Iri& xsd_string();
const Iri& xsd_integer();
const Iri& xsd_int();
const Iri& xsd_decimal();
const Iri& xsd_double();
const Iri& xsd_boolean();
const Iri& xsd_date();
const Iri& xsd_date_time();

/// Membership in the RDF Schema terms rdf:type, rdfs:Class, rdf:Property,
/// rdfs:domain and rdfs:range. rdfs:Resource is deliberately not a member:
/// it is a usable class.
bool is_schema_term(const Iri& iri);

/// Membership in the set of RDF datatypes: every IRI in the XML Schema
/// namespace, rdfs:Literal, and the rdf: literal datatypes.
bool is_datatype(const Iri& iri);

/// Classes that never become node types under the schema-dependent mapping:
/// datatypes and schema terms.
inline bool is_excluded_class(const Iri& iri) {
  return is_datatype(iri) || is_schema_term(iri);
}
}  // namespace vocab

}  // namespace rdfpg
