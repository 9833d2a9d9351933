// Command-line front end: validate definition files, run check suites, run
// the random explorer, list idempotents, and build extensions.

#include "skewex/error.hpp"
#include "skewex/harness.hpp"
#include "skewex/io.hpp"
#include "skewex/laurent.hpp"
#include "skewex/mathieu.hpp"
#include "skewex/ore.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace skewex;

MapSpec parse_map_arg(const std::string& arg) {
  const auto colon = arg.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "--map expects <file>:<role>, got '" + arg + "'");
  return {arg.substr(0, colon), parse_role(arg.substr(colon + 1))};
}

int error_exit(const Error& e) {
  json out{{"error", to_string(e.kind())}, {"message", e.message()}, {"witness", e.witness()}};
  std::cerr << out.dump() << '\n';
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownSuite: return exit_code::usage;
    default: return exit_code::failed;
  }
}

void emit(const Report& report, const std::string& path, bool timing) {
  const std::string text = report.to_jsonl(timing);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path + ": cannot write");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for derivations, automorphisms and idempotents of finite-dimensional algebras"};
  app.require_subcommand(1);

  std::string algebra_path;
  std::vector<std::string> map_args;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::string out_path;
  bool no_timing = false;

  auto* validate = app.add_subcommand("validate", "Load and certify an algebra and optional maps");
  validate->add_option("algebra", algebra_path, "Algebra JSON file")->required();
  validate->add_option("--map", map_args, "Map file with role, <file>:<role>");

  auto* suite = app.add_subcommand("suite", "Run named check suites");
  suite->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  suite->add_option("--map", map_args, "Map file with role, <file>:<role>");
  suite->add_option("--suites", suites, "Suites to run (default: all)")->delimiter(',');
  suite->add_option("--seed", seed, "Seed for randomized checks");
  suite->add_option("--json", out_path, "Write the JSON-lines report here instead of stdout");
  suite->add_flag("--no-timing", no_timing, "Omit timing fields");

  int trials = 100;
  int max_dim = 4;
  int first = 0;
  auto* explore = app.add_subcommand("explore", "Random counterexample search");
  explore->add_option("--seed", seed, "Run seed");
  explore->add_option("--trials", trials, "Number of trials")->check(CLI::NonNegativeNumber);
  explore->add_option("--max-dim", max_dim, "Largest algebra dimension")->check(CLI::Range(1, 6));
  explore->add_option("--first", first, "Index of the first trial, for replay")->check(CLI::NonNegativeNumber);
  explore->add_option("--json", out_path, "Write the JSON-lines report here instead of stdout");
  explore->add_flag("--no-timing", no_timing, "Omit timing fields");

  auto* idempotents = app.add_subcommand("idempotents", "List the idempotents of a commutative algebra");
  idempotents->add_option("algebra", algebra_path, "Algebra JSON file")->required();

  std::string mode;
  std::string map_path;
  std::string poly_text;
  auto* extend = app.add_subcommand("extend", "Build B with the map inner on A");
  extend->add_option("--mode", mode, "derivation or automorphism")
      ->required()
      ->check(CLI::IsMember({"derivation", "automorphism"}));
  extend->add_option("--algebra", algebra_path, "Algebra JSON file")->required();
  extend->add_option("--map", map_path, "Map JSON file")->required();
  extend->add_option("--poly", poly_text, "Monic polynomial, comma-separated coefficients, constant first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::usage;
  }

  try {
    if (*validate) {
      std::vector<MapSpec> maps;
      for (const auto& m : map_args) maps.push_back(parse_map_arg(m));
      const Definitions defs = parse_definitions(algebra_path, maps);
      json out{{"ok", true}, {"dim", defs.algebra.dim()}, {"commutative", is_commutative(defs.algebra)}};
      json roles = json::array();
      for (const LoadedMap& m : defs.maps) roles.push_back({{"file", m.source}, {"role", to_string(m.role)}});
      out["maps"] = std::move(roles);
      std::cout << out.dump() << '\n';
      return exit_code::ok;
    }
    if (*suite) {
      SuiteConfig config;
      config.algebra_path = algebra_path;
      for (const auto& m : map_args) config.maps.push_back(parse_map_arg(m));
      config.suites = suites;
      config.seed = seed;
      const Report report = run_suite(config);
      emit(report, out_path, !no_timing);
      return report.exit_code();
    }
    if (*explore) {
      const Report report = random_explorer(seed, trials, max_dim, first);
      emit(report, out_path, !no_timing);
      return report.exit_code();
    }
    if (*idempotents) {
      const Algebra a = algebra_from_json(read_json_file(algebra_path));
      const IdempotentSet s = enumerate_idempotents(a);
      std::cout << to_json(s).dump() << '\n';
      return s.complete ? exit_code::ok : exit_code::inconclusive;
    }
    if (*extend) {
      const Algebra a = algebra_from_json(read_json_file(algebra_path));
      const Mat m = map_matrix_from_json(read_json_file(map_path), a.dim());
      std::optional<Poly> p;
      if (!poly_text.empty()) p = parse_poly(poly_text);
      const ExtensionResult r = mode == "derivation" ? ore_quotient(a, Derivation::certify(a, m), p)
                                                     : laurent_quotient(a, AlgebraEndo::certify(a, m), p);
      std::cout << to_json(r).dump() << '\n';
      return exit_code::ok;
    }
  } catch (const Error& e) {
    return error_exit(e);
  }
  return exit_code::usage;
}
