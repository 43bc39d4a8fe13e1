#include "rdfpg/roundtrip.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rdfpg/dm1.hpp"
#include "rdfpg/dm2.hpp"
#include "rdfpg/error.hpp"
#include "rdfpg/pg_io.hpp"
#include "rdfpg/turtle.hpp"

namespace rdfpg {

namespace {

std::string dump_database(const RdfDatabase& db) {
  return "# schema\n" + serialize_turtle(rdf_schema_to_triples(db.schema)) + "# instance\n" +
         serialize_turtle(rdf_graph_to_triples(db.graph));
}

void run_dependent(CaseResult& result, const GeneratorConfig& config) {
  RdfDatabase original = gen_rdf_database(config);
  Dm1Result mapped = dm1(original);
  if (!mapped.source_report.valid()) {
    result.failure = "generated database is invalid:\n" + format_report(mapped.source_report);
  }
  result.semantics_preserved = mapped.target_report.valid();
  if (!result.semantics_preserved) {
    result.failure += "mapped PG does not validate:\n" + format_report(mapped.target_report);
  }

  PgDatabase reread{parse_pg_schema(serialize_pg_schema(mapped.database.schema)),
                    parse_pg(serialize_pg(mapped.database.graph))};
  RdfDatabase recovered = dm1_inv(reread);
  bool schema_ok = rdf_equal(recovered.schema, original.schema);
  bool instance_ok = rdf_equal(recovered.graph, original.graph);
  result.information_preserved = schema_ok && instance_ok;
  if (!schema_ok) result.failure += "recovered schema differs\n";
  if (!instance_ok) result.failure += "recovered instance differs\n";
  if (!result.passed()) {
    result.original_dump = dump_database(original);
    result.recovered_dump = dump_database(recovered);
  }
}

void run_independent(CaseResult& result, const GeneratorConfig& config) {
  RdfGraph original = gen_rdf_graph(config);
  PgDatabase mapped = dm2(original);
  ValidationReport report = validate_pg(mapped.graph, mapped.schema);
  std::size_t nodes = original.resources().size() + original.literals().size();
  std::size_t edges = original.object_edges().size() + original.datatype_edges().size();
  bool counts_ok = mapped.graph.nodes().size() == nodes && mapped.graph.edges().size() == edges &&
                   mapped.graph.properties().size() == 2 * nodes + edges;
  result.semantics_preserved = report.valid();
  if (!report.valid()) result.failure += "mapped PG does not validate:\n" + format_report(report);
  if (!counts_ok) result.failure += "node, edge or property count differs from the source graph\n";

  RdfGraph recovered = im2_inv(parse_pg(serialize_pg(mapped.graph)));
  result.information_preserved = counts_ok && rdf_equal(recovered, original);
  if (!rdf_equal(recovered, original)) result.failure += "recovered instance differs\n";
  if (!result.passed()) {
    result.original_dump = serialize_turtle(rdf_graph_to_triples(original));
    result.recovered_dump = serialize_turtle(rdf_graph_to_triples(recovered));
  }
}

}  // namespace

std::size_t RoundTripSummary::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed(); }));
}

const CaseResult* RoundTripSummary::first_failure() const {
  auto it = std::find_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed(); });
  return it == cases.end() ? nullptr : &*it;
}

CaseResult run_case(MappingMode mode, const GeneratorConfig& base, std::uint64_t index) {
  CaseResult result;
  result.index = index;
  result.seed = case_seed(base.seed, index);
  GeneratorConfig config = base;
  config.seed = result.seed;
  try {
    if (mode == MappingMode::Dependent) {
      run_dependent(result, config);
    } else {
      run_independent(result, config);
    }
  } catch (const std::exception& e) {
    result.information_preserved = false;
    result.failure += e.what();
  }
  return result;
}

RoundTripSummary run_roundtrip(MappingMode mode, const GeneratorConfig& base, std::uint64_t count,
                               unsigned threads) {
  RoundTripSummary summary;
  summary.cases.resize(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (std::uint64_t i = next++; i < count; i = next++) summary.cases[i] = run_case(mode, base, i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return summary;
}

}  // namespace rdfpg
