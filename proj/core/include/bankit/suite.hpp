#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bankit/ban.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/report.hpp"

// Randomised and exhaustive drivers shared by the CLI and the acceptance
// tests. Instance k of a run draws from an engine seeded with (seed, k), so a
// witness can be regenerated from those two numbers alone.
namespace bankit {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t instances = 1000;
  std::size_t max_n = 6;
  std::size_t max_length = 30;
  /// Cap on shortest trajectories enumerated per search.
  std::size_t enumeration_cap = 10'000;
  /// Witness bundles are written here when set.
  std::optional<std::filesystem::path> bundle_dir;
};

struct Tally {
  std::size_t verified = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  /// Individual instances of the property checked, summed over runs.
  std::size_t instances = 0;

  void add(const Check& c);
};

/// A reproducible failure: what broke and on which instance.
struct Witness {
  std::string suite;
  std::string check;
  std::string detail;
  std::uint64_t seed = 0;
  std::size_t instance = 0;
  std::string ban;
  std::optional<Configuration> x;
  std::optional<Trajectory> trajectory;
  nlohmann::json extra;
};

[[nodiscard]] nlohmann::json to_json(const Witness& w);

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::map<std::string, Tally> checks;
  /// Free-form counts (instances per family, verdict tallies, ...).
  std::map<std::string, std::size_t> counters;
  /// At most witness_limit per check; the tallies count all of them.
  std::vector<Witness> witnesses;
  std::size_t witness_limit = 5;
  double seconds = 0;

  /// No violation among the checks (or only among `informative` ones).
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::size_t violations(const std::string& check) const;
  /// Checks whose violations are reported but do not fail the run.
  std::vector<std::string> informative;

  void record(const CheckReport& report, const Witness& context);
  void record(const std::string& check, bool ok, const Witness& context);
};

[[nodiscard]] nlohmann::json to_json(const SuiteResult& r);

/// Writes every kept witness of r as <dir>/<suite>-<instance>-<check>.json,
/// with a -k suffix for the k-th repeat of the same instance and check.
/// Returns the paths written.
std::vector<std::filesystem::path> persist_witnesses(const SuiteResult& r,
                                                     const std::filesystem::path& dir);

/// Causality and potential checks on random monotone and nice networks with
/// random and BFS-shortest trajectories, plus the favourable-conditions
/// predicate for every target configuration.
[[nodiscard]] SuiteResult run_property_suite(const SuiteOptions& opts);

/// Hamiltonian shortest trajectories: exhaustive over two automata, random
/// monotone networks of three.
[[nodiscard]] SuiteResult run_hamiltonian_suite(const SuiteOptions& opts);

/// Paths, positive cycles, negative cycles and acyclic networks for n in
/// [min_n, max_n], `opts.instances` networks per shape and size.
[[nodiscard]] SuiteResult run_bounds_suite(const SuiteOptions& opts, std::size_t min_n = 2,
                                           std::size_t max_n = 10);

/// Every scheduler on generated instances, cross-checked against BFS.
[[nodiscard]] SuiteResult run_scheduler_suite(const SuiteOptions& opts);

/// Super-survivor transmission search: exhaustive over acyclic monotone
/// networks up to exhaustive_max_n automata, then `opts.instances` random
/// networks up to opts.max_n.
[[nodiscard]] SuiteResult run_conjecture_suite(const SuiteOptions& opts,
                                               std::size_t exhaustive_max_n = 4);

/// Identities of the semantic core over every configuration, `opts.instances`
/// networks for each n in 1..opts.max_n.
[[nodiscard]] SuiteResult run_identity_suite(const SuiteOptions& opts);

}  // namespace bankit
