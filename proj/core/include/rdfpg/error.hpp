#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdfpg {

enum class ErrorCode {
  // turtle-io
  SyntaxError,
  UnknownPrefix,
  BlankNodeUnsupported,
  // rdf-model
  InvalidIri,
  BlankNodePresent,
  MultipleTypes,
  ConflictingDomain,
  ConflictingRange,
  VocabularyTermAsClass,
  DuplicateElement,
  UnknownElement,
  // pg-model
  AmbiguousCanonicalKey,
  // mappings
  MissingEndpointType,
  DuplicatePropertyLabel,
  MissingIriProperty,
  NonIriLabel,
  UnsupportedEdgeProperty,
  SchemaViolation,
  MissingRequiredProperty,
  // pg-io
  FormatError,
  DanglingEdgeEndpoint,
  // harness
  UsageError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this one exception type; callers branch on
// code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rdfpg
