#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "splitlike/io.hpp"

namespace splitlike {

struct CampaignConfig {
  std::uint64_t seed = 1;
  /// Random cover sources per reduction (the exhaustive slice comes on top).
  std::size_t equivalence_sources = 200;
  bool exhaustive_slice = true;
  /// Random sources are all planted yes-instances.
  bool planted_only = false;
  std::size_t lemma_instances = 500;
  std::size_t fuzz_instances = 1000;
  std::size_t max_fuzz_vertices = 16;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;

  /// Every count zero and no exhaustive slice: the suites run nothing.
  static CampaignConfig empty();
};

struct CheckResult {
  /// Asserted checks fail the campaign on any failure; observed ones only report.
  bool asserted = true;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// At most five, ordered by their serialized text.
  std::vector<nlohmann::json> counterexamples;
  std::map<std::string, long long> tallies;
  double seconds = 0.0;

  bool ok() const { return !asserted || failed == 0; }
};

struct Report {
  std::map<std::string, CheckResult> checks;

  /// Order-independent: counts and tallies add, counterexamples keep the
  /// five smallest.
  void merge(const Report& other);
  bool ok() const;
  nlohmann::json to_json(bool with_timing = true) const;
};

/// Replacement solvers for the fuzz suite, keyed by solver name. Used by the
/// harness self-test to check that disagreements are caught.
using SolverOverride = std::function<VertexSet(const StpDocument&)>;
using SolverOverrides = std::map<std::string, SolverOverride>;

Report run_equivalence_suite(const CampaignConfig& cfg);
Report run_structure_suite(const CampaignConfig& cfg);
Report run_solver_fuzz(const CampaignConfig& cfg, const SolverOverrides& overrides = {});

/// Names of the fuzzed solvers (asserted ones first).
const std::vector<std::string>& fuzz_solver_names();

/// Builds one fuzz case for `solver`. Exposed for tests and benchmarks.
nlohmann::json make_fuzz_case(const std::string& solver, std::uint64_t seed, std::size_t max_vertices = 16);

/// Re-runs a stored counterexample. Throws ParseError on a malformed file.
Report replay(std::string_view counterexample_json);

}  // namespace splitlike
