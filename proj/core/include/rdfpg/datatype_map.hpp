#pragma once

#include "rdfpg/property_graph.hpp"
#include "rdfpg/vocabulary.hpp"

namespace rdfpg {

/// Correspondence between RDF datatype IRIs and PG datatypes.
///
///   xsd:string <-> String     xsd:integer  <-> Integer
///   xsd:int    <-> Int        xsd:decimal  <-> Decimal
///   xsd:double <-> Double     xsd:boolean  <-> Boolean
///   xsd:date   <-> Date       xsd:dateTime <-> DateTime
///
/// Every other IRI maps to Custom(iri), so to_rdf(to_pg(d)) == d for all d.
PgDatatype to_pg_datatype(const Iri& datatype);
Iri to_rdf_datatype(const PgDatatype& datatype);

}  // namespace rdfpg
