#include "rdfpg/datatype_map.hpp"

#include <array>

namespace rdfpg {

namespace {

struct Entry {
  const Iri& (*iri)();
  PgTypeKind kind;
};

constexpr std::array<Entry, 8> kTable = {{
    {vocab::xsd_string, PgTypeKind::String},
    {vocab::xsd_integer, PgTypeKind::Integer},
    {vocab::xsd_int, PgTypeKind::Int},
    {vocab::xsd_decimal, PgTypeKind::Decimal},
    {vocab::xsd_double, PgTypeKind::Double},
    {vocab::xsd_boolean, PgTypeKind::Boolean},
    {vocab::xsd_date, PgTypeKind::Date},
    {vocab::xsd_date_time, PgTypeKind::DateTime},
}};

}  // namespace

PgDatatype to_pg_datatype(const Iri& datatype) {
  for (const Entry& e : kTable) {
    if (e.iri() == datatype) return PgDatatype(e.kind);
  }
  return PgDatatype::custom(datatype);
}

Iri to_rdf_datatype(const PgDatatype& datatype) {
  if (datatype.is_custom()) return datatype.custom_iri();
  for (const Entry& e : kTable) {
    if (e.kind == datatype.kind()) return e.iri();
  }
  return vocab::xsd_string();
}

}  // namespace rdfpg
