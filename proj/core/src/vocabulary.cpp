#include "rdfpg/vocabulary.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "rdfpg/error.hpp"

namespace rdfpg {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

Iri make(std::string_view ns, std::string_view local) {
  return Iri(std::string(ns) + std::string(local));
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) {
    throw Error(ErrorCode::InvalidIri, "'" + value_ + "' is not a valid IRI");
  }
}

bool Iri::is_valid(std::string_view text) noexcept {
  if (std::any_of(text.begin(), text.end(), is_space)) return false;
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  return std::all_of(text.begin() + 1, text.begin() + static_cast<std::ptrdiff_t>(colon), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
  });
}

namespace vocab {

#define RDFPG_TERM(fn, ns_name, local)            \
  const Iri& fn() {                               \
    static const Iri iri = make(ns::ns_name, local); \
    return iri;                                   \
  }

RDFPG_TERM(rdf_type, rdf, "type")
RDFPG_TERM(rdf_property, rdf, "Property")
RDFPG_TERM(rdfs_class, rdfs, "Class")
RDFPG_TERM(rdfs_domain, rdfs, "domain")
RDFPG_TERM(rdfs_range, rdfs, "range")
RDFPG_TERM(rdfs_resource, rdfs, "Resource")
RDFPG_TERM(rdfs_literal, rdfs, "Literal")
RDFPG_TERM(xsd_string, xsd, "string")
RDFPG_TERM(xsd_integer, xsd, "integer")
RDFPG_TERM(xsd_int, xsd, "int")
RDFPG_TERM(xsd_decimal, xsd, "decimal")
RDFPG_TERM(xsd_double, xsd, "double")
RDFPG_TERM(xsd_boolean, xsd, "boolean")
RDFPG_TERM(xsd_date, xsd, "date")
RDFPG_TERM(xsd_date_time, xsd, "dateTime")

#undef RDFPG_TERM

bool is_schema_term(const Iri& iri) {
  return iri == rdf_type() || iri == rdfs_class() || iri == rdf_property() ||
         iri == rdfs_domain() || iri == rdfs_range();
}

bool is_datatype(const Iri& iri) {
  const std::string& s = iri.str();
  if (s.starts_with(ns::xsd) && s.size() > ns::xsd.size()) return true;
  if (iri == rdfs_literal()) return true;
  static const std::array<std::string_view, 4> rdf_datatypes = {"langString", "XMLLiteral",
                                                                "HTML", "JSON"};
  if (s.starts_with(ns::rdf)) {
    std::string_view local = std::string_view(s).substr(ns::rdf.size());
    return std::find(rdf_datatypes.begin(), rdf_datatypes.end(), local) != rdf_datatypes.end();
  }
  return false;
}

}  // namespace vocab
}  // namespace rdfpg
