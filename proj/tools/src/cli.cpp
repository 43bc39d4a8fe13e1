#include "rdfpg_tools/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "rdfpg/dm1.hpp"
#include "rdfpg/dm2.hpp"
#include "rdfpg/error.hpp"
#include "rdfpg/pg_io.hpp"
#include "rdfpg/roundtrip.hpp"
#include "rdfpg/turtle.hpp"

namespace rdfpg::cli {

namespace {

class Console {
 public:
  Console(std::ostream& out, std::ostream& err) : out(out), err(err) {
    const char* env = std::getenv("RDFPG_COLOR");
    color_ = env != nullptr && std::string_view(env) != "0" && std::string_view(env) != "never" &&
             std::string_view(env) != "";
  }

  std::string paint(std::string_view text, std::string_view code) const {
    if (!color_) return std::string(text);
    return "\x1b[" + std::string(code) + "m" + std::string(text) + "\x1b[0m";
  }
  void error(const std::string& message) { err << paint("error:", "31") << " " << message << "\n"; }
  void warning(const std::string& message) { err << paint("warning:", "33") << " " << message << "\n"; }

  std::ostream& out;
  std::ostream& err;

 private:
  bool color_ = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

struct TurtleInput {
  bool skolemize = false;
};

TripleSet load_turtle(const std::string& path, const TurtleInput& input, Console& console) {
  TurtleOptions options;
  options.allow_blank_nodes = input.skolemize;
  options.on_warning = [&](const std::string& message) { console.warning(path + ": " + message); };
  TripleSet triples = parse_turtle(read_file(path), options);
  return input.skolemize ? skolemize(triples) : triples;
}

bool print_report(Console& console, std::string_view what, const ValidationReport& report) {
  std::string text = format_report(report);
  std::size_t end = text.find('\n');
  console.out << what << ": " << console.paint(text.substr(0, end), report.valid() ? "32" : "31")
              << text.substr(end);
  return report.valid();
}

MappingMode parse_mode(const std::string& mode) {
  return mode == "dep" ? MappingMode::Dependent : MappingMode::Independent;
}

// ---------------------------------------------------------------------------

struct ConvertArgs {
  std::string mode;
  std::string rdf;
  std::string schema;
  std::string out_pg;
  std::string out_pg_schema;
  std::string out_cypher;
  bool skolemize = false;
  bool complete_schema = false;
  std::string first_type;
};

int convert(const ConvertArgs& a, Console& console) {
  TurtleInput input{a.skolemize};
  GraphBuildOptions build;
  if (a.first_type == "lexicographic") build.types = TypeSelection::Lexicographic;

  TripleSet instance = load_turtle(a.rdf, input, console);
  PgDatabase database;
  bool valid = true;
  if (parse_mode(a.mode) == MappingMode::Dependent) {
    if (a.schema.empty()) throw Error(ErrorCode::UsageError, "--mode dep requires --schema");
    TripleSet schema_triples = load_turtle(a.schema, input, console);
    if (a.complete_schema) schema_triples = complete_partial_schema(schema_triples);
    RdfDatabase source{build_rdf_schema(schema_triples), build_rdf_graph(instance, build)};
    Dm1Result result = dm1(source);
    valid = print_report(console, "source RDF database", result.source_report);
    valid = print_report(console, "mapped property graph", result.target_report) && valid;
    database = std::move(result.database);
  } else {
    if (!a.schema.empty()) console.warning("--schema is ignored in indep mode");
    database = dm2(build_rdf_graph(instance, build));
    valid = print_report(console, "mapped property graph", validate_pg(database.graph, database.schema));
  }

  write_file(a.out_pg, serialize_pg(database.graph));
  write_file(a.out_pg_schema, serialize_pg_schema(database.schema));
  if (!a.out_cypher.empty()) write_file(a.out_cypher, export_import_script(database.graph));
  console.out << database.graph.nodes().size() << " nodes, " << database.graph.edges().size() << " edges, "
              << database.graph.properties().size() << " properties\n";
  return valid ? kExitOk : kExitInvalid;
}

struct InvertArgs {
  std::string mode;
  std::string pg;
  std::string pg_schema;
  std::string out_rdf;
  std::string out_rdf_schema;
};

int invert(const InvertArgs& a, Console& console) {
  PropertyGraph graph = parse_pg(read_file(a.pg));
  bool valid = true;
  if (parse_mode(a.mode) == MappingMode::Dependent) {
    if (a.pg_schema.empty()) throw Error(ErrorCode::UsageError, "--mode dep requires --pg-schema");
    PgDatabase database{parse_pg_schema(read_file(a.pg_schema)), std::move(graph)};
    valid = print_report(console, "property graph",
                         validate_pg(database.graph, database.schema, dm1_validation_options()));
    RdfDatabase rdf = dm1_inv(database);
    write_file(a.out_rdf, serialize_turtle(rdf_graph_to_triples(rdf.graph)));
    if (!a.out_rdf_schema.empty()) write_file(a.out_rdf_schema, serialize_turtle(rdf_schema_to_triples(rdf.schema)));
  } else {
    if (!a.out_rdf_schema.empty()) console.warning("--out-rdf-schema is ignored in indep mode");
    if (!a.pg_schema.empty()) {
      valid = print_report(console, "property graph", validate_pg(graph, parse_pg_schema(read_file(a.pg_schema))));
    }
    write_file(a.out_rdf, serialize_turtle(rdf_graph_to_triples(im2_inv(graph))));
  }
  return valid ? kExitOk : kExitInvalid;
}

struct ValidateArgs {
  std::string kind;
  std::string instance;
  std::string schema;
  bool skolemize = false;
  std::string first_type;
  std::vector<std::string> implicit_keys;
};

int validate(const ValidateArgs& a, Console& console) {
  ValidationReport report;
  if (a.kind == "rdf") {
    TurtleInput input{a.skolemize};
    GraphBuildOptions build;
    if (a.first_type == "lexicographic") build.types = TypeSelection::Lexicographic;
    RdfGraph graph = build_rdf_graph(load_turtle(a.instance, input, console), build);
    report = validate_rdf(graph, build_rdf_schema(load_turtle(a.schema, input, console)));
  } else {
    PgValidationOptions options;
    options.implicit_keys = a.implicit_keys;
    report = validate_pg(parse_pg(read_file(a.instance)), parse_pg_schema(read_file(a.schema)), options);
  }
  return print_report(console, a.instance, report) ? kExitOk : kExitInvalid;
}

struct RoundtripArgs {
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  unsigned threads = 0;
  GeneratorConfig config;
};

int roundtrip(const RoundtripArgs& a, Console& console) {
  if (a.count == 0) throw Error(ErrorCode::UsageError, "--count must be at least 1");
  GeneratorConfig config = a.config;
  config.seed = a.seed;
  auto start = std::chrono::steady_clock::now();
  RoundTripSummary summary = run_roundtrip(parse_mode(a.mode), config, a.count, a.threads);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const CaseResult& c : summary.cases) {
    if (!c.passed()) console.out << "case " << c.index << " (seed " << c.seed << "): " << console.paint("FAIL", "31") << "\n";
  }
  console.out << a.mode << " round-trip: " << summary.passed() << "/" << summary.cases.size() << " passed in "
              << std::fixed << std::setprecision(2) << seconds << "s (seed " << a.seed << ")\n";
  if (const CaseResult* f = summary.first_failure()) {
    console.out << "first failure: case " << f->index << ", case seed " << f->seed << "\n"
                << f->failure << (f->failure.empty() || f->failure.back() == '\n' ? "" : "\n")
                << "--- original\n" << f->original_dump << "--- recovered\n" << f->recovered_dump;
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Console console(out, err);
  CLI::App app{"Convert RDF databases to property graph databases and back", "rdfpg"};
  app.require_subcommand(1);

  const std::vector<std::string> modes = {"dep", "indep"};

  ConvertArgs convert_args;
  auto* convert_cmd = app.add_subcommand("convert", "Map an RDF database to a property graph database");
  convert_cmd->add_option("--mode", convert_args.mode, "dep (schema-dependent) or indep (schema-independent)")
      ->required()->check(CLI::IsMember(modes));
  convert_cmd->add_option("--rdf", convert_args.rdf, "Instance Turtle file")->required();
  convert_cmd->add_option("--schema", convert_args.schema, "Schema Turtle file (dep mode)");
  convert_cmd->add_option("--out-pg", convert_args.out_pg, "Output property graph JSON")->required();
  convert_cmd->add_option("--out-pg-schema", convert_args.out_pg_schema, "Output PG schema JSON")->required();
  convert_cmd->add_option("--out-cypher", convert_args.out_cypher, "Optional openCypher import script");
  convert_cmd->add_flag("--skolemize", convert_args.skolemize, "Replace blank nodes with fresh IRIs");
  convert_cmd->add_flag("--complete-schema", convert_args.complete_schema,
                        "Add rdfs:Resource as the missing domain or range of declared properties");
  convert_cmd->add_option("--first-type", convert_args.first_type,
                          "Keep the lexicographically first of several rdf:type values")
      ->check(CLI::IsMember({"lexicographic"}));

  InvertArgs invert_args;
  auto* invert_cmd = app.add_subcommand("invert", "Map a property graph database back to RDF");
  invert_cmd->add_option("--mode", invert_args.mode, "dep or indep")->required()->check(CLI::IsMember(modes));
  invert_cmd->add_option("--pg", invert_args.pg, "Property graph JSON")->required();
  invert_cmd->add_option("--pg-schema", invert_args.pg_schema, "PG schema JSON (required in dep mode)");
  invert_cmd->add_option("--out-rdf", invert_args.out_rdf, "Output instance Turtle")->required();
  invert_cmd->add_option("--out-rdf-schema", invert_args.out_rdf_schema, "Output schema Turtle (dep mode)");

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Check an instance against a schema");
  validate_cmd->add_option("--kind", validate_args.kind, "rdf or pg")->required()->check(CLI::IsMember({"rdf", "pg"}));
  validate_cmd->add_option("--instance", validate_args.instance, "Instance file")->required();
  validate_cmd->add_option("--schema", validate_args.schema, "Schema file")->required();
  validate_cmd->add_option("--implicit-key", validate_args.implicit_keys,
                           "Node property key accepted without a property type, e.g. iri for dep-mode output (pg)");
  validate_cmd->add_flag("--skolemize", validate_args.skolemize, "Replace blank nodes with fresh IRIs (rdf)");
  validate_cmd->add_option("--first-type", validate_args.first_type, "Type selection for multi-typed subjects (rdf)")
      ->check(CLI::IsMember({"lexicographic"}));

  RoundtripArgs roundtrip_args;
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check information and semantics preservation on generated data");
  roundtrip_cmd->add_option("--mode", roundtrip_args.mode, "dep or indep")->required()->check(CLI::IsMember(modes));
  roundtrip_cmd->add_option("--seed", roundtrip_args.seed, "Batch seed")->default_val(0);
  roundtrip_cmd->add_option("--count", roundtrip_args.count, "Number of generated cases")->required();
  roundtrip_cmd->add_option("--threads", roundtrip_args.threads, "Worker threads (0 = all cores)")->default_val(0);
  roundtrip_cmd->add_option("--max-classes", roundtrip_args.config.max_classes)->default_val(roundtrip_args.config.max_classes);
  roundtrip_cmd->add_option("--max-properties", roundtrip_args.config.max_properties)->default_val(roundtrip_args.config.max_properties);
  roundtrip_cmd->add_option("--max-resources", roundtrip_args.config.max_resources)->default_val(roundtrip_args.config.max_resources);
  roundtrip_cmd->add_option("--max-triples", roundtrip_args.config.max_triples)->default_val(roundtrip_args.config.max_triples);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kExitOk;
    }
    console.error(std::string(e.what()));
    const CLI::App* scope = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << scope->help();
    return kExitError;
  }

  try {
    if (convert_cmd->parsed()) return convert(convert_args, console);
    if (invert_cmd->parsed()) return invert(invert_args, console);
    if (validate_cmd->parsed()) return validate(validate_args, console);
    return roundtrip(roundtrip_args, console);
  } catch (const Error& e) {
    console.error(e.what());
    return kExitError;
  } catch (const std::exception& e) {
    console.error(std::string("internal: ") + e.what());
    return kExitError;
  }
}

}  // namespace rdfpg::cli
