#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdfpg/generator.hpp"

namespace rdfpg {

enum class MappingMode { Dependent, Independent };

struct CaseResult {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  bool information_preserved = false;
  bool semantics_preserved = false;
  std::string failure;  // empty on success
  std::string original_dump;
  std::string recovered_dump;

  bool passed() const { return information_preserved && semantics_preserved && failure.empty(); }
};

struct RoundTripSummary {
  std::vector<CaseResult> cases;  // ordered by index

  std::size_t passed() const;
  bool all_passed() const { return passed() == cases.size(); }
  const CaseResult* first_failure() const;
};

/// Runs one generated case through the mapping, its PG JSON serialization and
/// the inverse mapping. Dependent mode checks schema and instance equality
/// plus validity of the mapped database; independent mode checks instance
/// equality, validity against the generic schema and the node/edge/property
/// counts.
CaseResult run_case(MappingMode mode, const GeneratorConfig& base, std::uint64_t index);

/// `threads` == 0 picks the hardware concurrency.
RoundTripSummary run_roundtrip(MappingMode mode, const GeneratorConfig& base, std::uint64_t count,
                               unsigned threads = 0);

}  // namespace rdfpg
