#include "rdfpg/error.hpp"

namespace rdfpg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::BlankNodeUnsupported: return "BlankNodeUnsupported";
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::BlankNodePresent: return "BlankNodePresent";
    case ErrorCode::MultipleTypes: return "MultipleTypes";
    case ErrorCode::ConflictingDomain: return "ConflictingDomain";
    case ErrorCode::ConflictingRange: return "ConflictingRange";
    case ErrorCode::VocabularyTermAsClass: return "VocabularyTermAsClass";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::AmbiguousCanonicalKey: return "AmbiguousCanonicalKey";
    case ErrorCode::MissingEndpointType: return "MissingEndpointType";
    case ErrorCode::DuplicatePropertyLabel: return "DuplicatePropertyLabel";
    case ErrorCode::MissingIriProperty: return "MissingIriProperty";
    case ErrorCode::NonIriLabel: return "NonIriLabel";
    case ErrorCode::UnsupportedEdgeProperty: return "UnsupportedEdgeProperty";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::MissingRequiredProperty: return "MissingRequiredProperty";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::DanglingEdgeEndpoint: return "DanglingEdgeEndpoint";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace rdfpg
