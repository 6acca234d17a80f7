// Acceptance criteria, one PASS/FAIL line each. Every tolerance and size is
// pinned here; a criterion that cannot be met is reported as FAIL with the
// numbers that refute it.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bankit/core.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/graph.hpp"
#include "bankit/json.hpp"
#include "bankit/potential.hpp"
#include "bankit/suite.hpp"

namespace fs = std::filesystem;
using namespace bankit;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 1;

// Time limits in seconds.
constexpr double kExampleLimit = 1.0;
constexpr double kHamiltonianLimit = 300.0;
constexpr double kPropertyLimit = 1800.0;
constexpr double kBoundsLimit = 300.0;
constexpr double kSchedulerLimit = 600.0;
constexpr double kIdentityLimit = 120.0;

// Sizes.
constexpr std::size_t kHamiltonianThreeAutomata = 10'000;
constexpr std::size_t kPropertyNetworks = 10'000;
constexpr std::size_t kPropertyMaxN = 6;
constexpr std::size_t kPropertyMaxLength = 30;
constexpr std::size_t kBoundsPerShapeAndSize = 10;
constexpr std::size_t kSchedulerInstances = 1'000;
constexpr std::size_t kConjectureRandom = 1'000;
constexpr std::size_t kConjectureMaxN = 6;
constexpr std::size_t kConjectureExhaustiveN = 4;
constexpr std::size_t kIdentityPerSize = 40;
constexpr std::size_t kIdentityMaxN = 8;

const char* const kExample1 =
    "1: x4 & x5\n"
    "2: x1 | x2\n"
    "3: (x1 | x2) & x4\n"
    "4: x3\n"
    "5: x1 | x3 | x4\n";

const char* const kExample2 =
    "1: x1\n"
    "2: x2\n"
    "3: x1\n"
    "4: (x1 & x3) | x2\n";

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("mismatch: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Configuration cfg(const std::string& s) { return parse_config(s, s.size()); }

std::vector<Automaton> moves1(std::initializer_list<Automaton> one_based) {
  std::vector<Automaton> v;
  for (Automaton i : one_based) v.push_back(i - 1);
  return v;
}

AutomatonSet ids1(std::initializer_list<Automaton> one_based) {
  AutomatonSet s;
  for (Automaton i : one_based) s.insert(i - 1);
  return s;
}

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void time_limit(Outcome& o, double seconds, double limit) {
  std::ostringstream s;
  s.precision(3);
  s << seconds << " s (limit " << limit << " s)";
  o.require(seconds < limit, "time " + s.str());
  if (seconds < limit) o.note(s.str());
}

std::string tally_text(const SuiteResult& r) {
  std::ostringstream s;
  for (const auto& [name, t] : r.checks) {
    if (t.violated == 0) continue;
    const bool info = std::find(r.informative.begin(), r.informative.end(), name) != r.informative.end();
    s << " " << name << "=" << t.violated << (info ? "(informative)" : "");
  }
  return s.str();
}

void suite_outcome(Outcome& o, const SuiteResult& r) {
  o.note(std::to_string(r.instances) + " instances");
  const std::string failed = tally_text(r);
  if (!failed.empty()) o.note("violations:" + failed);
  o.require(r.ok(), "suite " + r.name + " has gating violations");
  for (const Witness& w : r.witnesses) {
    const bool info = std::find(r.informative.begin(), r.informative.end(), w.check) != r.informative.end();
    if (!info) {
      o.note("first witness: " + w.check + " on instance " + std::to_string(w.instance) + ": " + w.detail);
      break;
    }
  }
}

// --- 1 ---------------------------------------------------------------------

Outcome example1_end_to_end() {
  Outcome o;
  const auto start = Clock::now();
  const Ban ban = parse_ban(kExample1);
  const auto t = shortest_trajectory(ban, cfg("10110"), cfg("01000"));
  o.require(t.has_value(), "01000 unreachable");
  if (t) {
    o.require(t->length() == 8, "length " + std::to_string(t->length()));
    const std::vector<std::string> expected{"10110", "00110", "00010", "00011", "10011",
                                            "11011", "11001", "01001", "01000"};
    std::vector<std::string> got;
    for (const Configuration& c : t->configs()) got.push_back(c.to_string());
    o.require(got == expected, "configuration sequence");
    o.require(t->moves == moves1({1, 3, 5, 1, 2, 4, 1, 5}), "move sequence");
  }
  o.require(classify(ban).totally_positive, "not totally positive");
  o.require(unstable_set(ban, cfg("01000")).empty(), "01000 not stable");
  time_limit(o, since(start), kExampleLimit);
  return o;
}

// --- 2 ---------------------------------------------------------------------

void compare_table(Outcome& o, const CarrierTable& t, const std::vector<std::vector<AutomatonSet>>& expected,
                   const std::string& series, std::size_t& cells) {
  for (Automaton j = 0; j < expected.size(); ++j) {
    for (std::size_t s = 0; s < expected[j].size(); ++s) {
      ++cells;
      const AutomatonSet got = s <= t.steps() ? t.at(j, s) : AutomatonSet{};
      o.require(got == expected[j][s], series + " R*_" + std::to_string(j + 1) + "(" + std::to_string(s) +
                                           ") = " + got.to_string() + ", expected " +
                                           expected[j][s].to_string());
    }
  }
}

Outcome example2_tables() {
  Outcome o;
  const auto start = Clock::now();
  const Ban ban = parse_ban(kExample2);
  const AutomatonSet none;
  std::size_t cells = 0;
  const CarrierTable first = carrier_tables(ban, {cfg("1100"), moves1({4, 3, 4})});
  compare_table(o, first,
                {{ids1({1}), ids1({1, 4}), ids1({1, 3, 4}), ids1({1, 3, 4})},
                 {ids1({2}), ids1({2, 4}), ids1({2, 4}), ids1({2, 4})},
                 {ids1({3}), ids1({3, 4}), ids1({4}), none},
                 {ids1({4}), none, none, none}},
                "first series", cells);
  const CarrierTable second = carrier_tables(ban, {cfg("1100"), moves1({3, 4})});
  compare_table(o, second,
                {{ids1({1}), ids1({1, 3}), ids1({1, 3, 4})},
                 {ids1({2}), ids1({2}), ids1({2, 4})},
                 {ids1({3}), none, none},
                 {ids1({4}), ids1({4}), none}},
                "second series", cells);
  o.note(std::to_string(cells) + " cells compared");
  time_limit(o, since(start), kExampleLimit);
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome example2_survivors() {
  Outcome o;
  const Ban ban = parse_ban(kExample2);
  const Streamline first{cfg("1100"), moves1({4, 3, 4})};
  const AutomatonSet supers = super_survivors(ban, first);
  const SurvivorReport surv = survivors(ban, first);
  o.require(supers == ids1({1, 2}), "super-survivors " + supers.to_string());
  o.require(surv.survivors == ids1({1, 2, 3}), "survivors " + surv.survivors.to_string() + ", expected {1,2,3}");
  // The trajectory alone (first two updates) for comparison.
  const SurvivorReport traj = survivors(ban, Streamline{cfg("1100"), moves1({4, 3})});
  o.note("survivors after the first two updates " + traj.survivors.to_string());
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome example1_potentials() {
  Outcome o;
  const Ban ban = parse_ban(kExample1);
  const Streamline line{cfg("10110"), moves1({1, 3, 5, 1, 2, 4, 1, 5})};
  const CarrierTable t = carrier_tables(ban, line);
  const auto lost = t.loss_time(0);
  o.require(lost == 1U, "<0,1> lost at " + (lost ? std::to_string(*lost) : std::string("never")));
  o.require(t.at(4, 1).contains(0), "1 not in R*_5(1) = " + t.at(4, 1).to_string());
  o.require(t.at(4, 7).contains(0), "1 not in R*_5(7) = " + t.at(4, 7).to_string());

  // At t = 4 automaton 1 inherits what 4 and 5 carried at t = 3.
  const PotentialTracker tracker(ban, line);
  const Potential p41 = tracker.potential_at(0, 4);
  o.require(p41 == Potential{4, 0}, "1 carries " + p41.to_string() + " at t = 4");
  const auto parents = tracker.parents(p41);
  const std::vector<Potential> expected{tracker.potential_at(3, 3), tracker.potential_at(4, 3)};
  o.require(parents == expected, "parents of <4,1>");
  const auto xs = tracker.configs();
  o.require(transmits(ban, xs[3], 3, 0) && transmits(ban, xs[3], 4, 0), "4 and 5 do not both transmit to 1 at t = 3");
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome hamiltonian() {
  Outcome o;
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.instances = kHamiltonianThreeAutomata;
  const SuiteResult r = run_hamiltonian_suite(opts);
  suite_outcome(o, r);
  const auto count = [&](const std::string& k) {
    auto it = r.counters.find(k);
    return it == r.counters.end() ? std::size_t{0} : it->second;
  };
  o.require(count("networks_n2") == 256, "n = 2 networks " + std::to_string(count("networks_n2")));
  o.require(count("networks_n3") >= kHamiltonianThreeAutomata, "n = 3 networks " + std::to_string(count("networks_n3")));
  o.note(std::to_string(count("hamiltonian_networks")) + " networks with a Hamiltonian shortest trajectory");
  time_limit(o, r.seconds, kHamiltonianLimit);
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome property_suite(const fs::path& bundles) {
  Outcome o;
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.instances = kPropertyNetworks;
  opts.max_n = kPropertyMaxN;
  opts.max_length = kPropertyMaxLength;
  opts.bundle_dir = bundles / "properties";
  const SuiteResult r = run_property_suite(opts);
  suite_outcome(o, r);
  o.require(r.instances >= kPropertyNetworks, "too few networks");
  time_limit(o, r.seconds, kPropertyLimit);
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome bounds(const fs::path& bundles) {
  Outcome o;
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.instances = kBoundsPerShapeAndSize;
  opts.bundle_dir = bundles / "bounds";
  const SuiteResult r = run_bounds_suite(opts, 2, 10);
  suite_outcome(o, r);
  time_limit(o, r.seconds, kBoundsLimit);
  return o;
}

// --- 8 ---------------------------------------------------------------------

Outcome schedulers(const fs::path& bundles) {
  Outcome o;
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.instances = kSchedulerInstances;
  opts.bundle_dir = bundles / "schedulers";
  const SuiteResult r = run_scheduler_suite(opts);
  suite_outcome(o, r);
  for (const auto& [k, v] : r.counters) {
    if (v > 0 && (k.ends_with(".bound_refuted") || k.ends_with(".construction_broke"))) {
      o.note(k + "=" + std::to_string(v));
    }
  }
  time_limit(o, r.seconds, kSchedulerLimit);
  return o;
}

// --- 9 ---------------------------------------------------------------------

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  if (!fs::exists(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path());
    std::ostringstream s;
    s << in.rdbuf();
    out[e.path().filename().string()] = s.str();
  }
  return out;
}

Outcome conjecture(const fs::path& bundles) {
  Outcome o;
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.instances = kConjectureRandom;
  opts.max_n = kConjectureMaxN;
  std::vector<SuiteResult> runs;
  std::vector<fs::path> dirs{bundles / "conjecture-a", bundles / "conjecture-b"};
  for (const fs::path& d : dirs) {
    fs::remove_all(d);
    opts.bundle_dir = d;
    runs.push_back(run_conjecture_suite(opts, kConjectureExhaustiveN));
  }
  json a = to_json(runs[0]);
  json b = to_json(runs[1]);
  a.erase("seconds");
  b.erase("seconds");
  o.require(a == b, "the two runs disagree");
  const auto files_a = read_dir(dirs[0]);
  o.require(files_a == read_dir(dirs[1]), "the two runs persisted different bundles");
  const auto count = [&](const char* k) {
    auto it = runs[0].counters.find(k);
    return it == runs[0].counters.end() ? std::size_t{0} : it->second;
  };
  o.require(files_a.size() == count("COUNTEREXAMPLE"),
            std::to_string(count("COUNTEREXAMPLE")) + " counterexamples but " +
                std::to_string(files_a.size()) + " bundles");
  o.require(runs[0].counters.at("exhaustive_networks") > 0, "no exhaustive networks");
  o.note("HOLDS=" + std::to_string(count("HOLDS")) + " COUNTEREXAMPLE=" + std::to_string(count("COUNTEREXAMPLE")) +
         " INCONCLUSIVE=" + std::to_string(count("INCONCLUSIVE")) + " over " +
         std::to_string(runs[0].instances) + " networks");
  o.note("bundles in " + dirs[0].string());
  return o;
}

// --- 10 --------------------------------------------------------------------

Outcome identities(const fs::path& bundles) {
  Outcome o;
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.instances = kIdentityPerSize;
  opts.max_n = kIdentityMaxN;
  opts.bundle_dir = bundles / "identities";
  const SuiteResult r = run_identity_suite(opts);
  suite_outcome(o, r);
  time_limit(o, r.seconds, kIdentityLimit);
  return o;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome(const fs::path&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  fs::path bundles = "acceptance-bundles";
  app.add_option("criteria", only, "criteria to run (default: all)")->check(CLI::Range(1, 10));
  app.add_option("--bundle-dir", bundles, "where witness bundles go");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "example 1 end to end", [](const fs::path&) { return example1_end_to_end(); }},
      {2, "example 2 carrier tables", [](const fs::path&) { return example2_tables(); }},
      {3, "example 2 survivors and super-survivors", [](const fs::path&) { return example2_survivors(); }},
      {4, "example 1 potential facts", [](const fs::path&) { return example1_potentials(); }},
      {5, "hamiltonian shortest trajectories", [](const fs::path&) { return hamiltonian(); }},
      {6, "causality and potential properties", property_suite},
      {7, "distance bounds by shape", bounds},
      {8, "scheduler validity", schedulers},
      {9, "super-survivor transmission search", conjecture},
      {10, "core identities", identities},
  };

  bool ok = true;
  for (const Criterion& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    Outcome o;
    try {
      o = c.run(bundles);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    ok &= o.pass;
    std::cout << "criterion " << c.number << " (" << c.name << "): " << (o.pass ? "PASS" : "FAIL") << "\n";
    for (const std::string& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return ok ? 0 : 1;
}
