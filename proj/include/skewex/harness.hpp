#ifndef SKEWEX_HARNESS_HPP
#define SKEWEX_HARNESS_HPP

#include "skewex/algebra.hpp"
#include "skewex/io.hpp"
#include "skewex/maps.hpp"
#include "skewex/mathieu.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewex {

enum class MapRole { Derivation, Endomorphism, EDerivation };
const char* to_string(MapRole r);
/// "derivation" | "endomorphism" | "ederivation"; throws ParseError.
MapRole parse_role(const std::string& s);

struct MapSpec {
  std::string path;
  MapRole role;
};

struct LoadedMap {
  std::string source;
  MapRole role;
  Mat matrix;
  std::optional<Derivation> derivation;
  /// The endomorphism itself, or phi = I - delta for an E-derivation.
  std::optional<AlgebraEndo> endo;
};

struct Definitions {
  Algebra algebra;
  std::vector<LoadedMap> maps;
};

/// Loads and certifies everything or throws on the first violation
/// (ParseError with the field, ValidationError with the basis witness).
/// A map file may carry "unital": false to allow non-unital maps.
Definitions parse_definitions(const std::string& algebra_path, const std::vector<MapSpec>& maps);

enum class Status { Pass, Fail, Inconclusive, NotApplicable };
const char* to_string(Status s);

struct Record {
  std::string suite;
  std::string check;
  Status status = Status::Pass;
  json data = json::object();
  double seconds = 0;

  json to_json(bool with_timing = true) const;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int failed = 1;
constexpr int usage = 2;
constexpr int inconclusive = 3;
}  // namespace exit_code

struct Report {
  std::vector<Record> records;

  /// 1 on any fail, else 3 on any inconclusive, else 0.
  int exit_code() const;
  std::size_t count(Status s) const;
  /// One JSON object per line.
  std::string to_jsonl(bool with_timing = true) const;
};

/// Fixed registry, in run order.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::string algebra_path;
  std::vector<MapSpec> maps;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::size_t idempotent_cap = skewex::idempotent_cap();
};

/// Suites run against the given maps; when a role is missing they fall
/// back to a basis of Der(A) and automorphisms built from it. An empty
/// list runs every suite. Throws UnknownSuite before running anything.
Report run_suites(const Definitions& defs, const std::vector<std::string>& suites, std::uint64_t seed,
                  std::size_t cap = idempotent_cap());
Report run_suite(const SuiteConfig& config);

/// Trials first..first+trials-1 of the run seeded with `seed`; trial t
/// depends only on (seed, t), so any record can be replayed alone.
Report random_explorer(std::uint64_t seed, int trials, int max_dim, int first = 0,
                       std::size_t cap = idempotent_cap());

}  // namespace skewex

#endif  // SKEWEX_HARNESS_HPP
