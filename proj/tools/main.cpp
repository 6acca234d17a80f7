// bankit: command-line front end for the Boolean automata network library.
//
// Exit codes: 0 success, 1 usage or input error, 2 hypothesis not met or
// infeasible request, 3 a checked property was violated (witness printed).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bankit/causality.hpp"
#include "bankit/core.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/error.hpp"
#include "bankit/graph.hpp"
#include "bankit/json.hpp"
#include "bankit/potential.hpp"
#include "bankit/schedule.hpp"
#include "bankit/suite.hpp"

namespace {

using namespace bankit;

constexpr const char* kVersion = "0.3.0";

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kFinding = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Ban ban;
  std::optional<Configuration> init;
};

Loaded load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const BanSource src = read_ban_source(ss.str());
  Loaded l{compile(src), std::nullopt};
  if (src.initial) l.init = parse_config(*src.initial, src.n);
  return l;
}

std::vector<Automaton> parse_ids(const std::string& text, std::size_t n) {
  std::vector<Automaton> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || id == 0 || id > n) {
      throw UsageError("bad automaton id '" + item + "' (expected 1.." + std::to_string(n) + ")");
    }
    out.push_back(id - 1);
  }
  return out;
}

std::string join_ids(const std::vector<Automaton>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::syntax_error:
    case ErrorCode::unknown_variable:
    case ErrorCode::duplicate_automaton:
    case ErrorCode::missing_automaton:
    case ErrorCode::length_mismatch:
    case ErrorCode::bad_character:
    case ErrorCode::index_out_of_range:
    case ErrorCode::invalid_trajectory:
      return kUsage;
    default:
      return kInfeasible;
  }
}

// Shared options of the subcommands.
struct Common {
  std::string ban_path;
  std::string format = "text";
  std::string x;
  std::string y;
  std::string moves;
  std::string updates;
  std::size_t cap = kShortestEnumerationCap;
};

struct Context {
  Common c;
  std::optional<Loaded> net;

  void open() { net = load(c.ban_path); }
  [[nodiscard]] const Ban& ban() const { return net->ban; }
  [[nodiscard]] std::size_t n() const { return net->ban.size(); }

  Configuration config(const std::string& text, const char* what) const {
    if (text.empty()) throw UsageError(std::string("missing ") + what);
    return parse_config(text, n());
  }
  // x from the command line, or from the file's #@init line.
  Configuration initial() const {
    if (!c.x.empty()) return parse_config(c.x, n());
    if (net->init) return *net->init;
    throw UsageError("missing initial configuration (argument or #@init line)");
  }
  Trajectory trajectory() const {
    if (c.moves.empty()) throw UsageError("--moves is required");
    Trajectory t{initial(), parse_ids(c.moves, n())};
    validate_trajectory(ban(), t);
    return t;
  }
  Streamline streamline() const {
    if (!c.updates.empty()) return {initial(), parse_ids(c.updates, n())};
    if (!c.moves.empty()) return Streamline::of(trajectory());
    throw UsageError("--updates or --moves is required");
  }
  bool json() const { return c.format == "json"; }
  bool dot() const { return c.format == "dot"; }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

json envelope(const std::string& command, json body) {
  body["command"] = command;
  body["version"] = kVersion;
  return body;
}

std::string check_lines(const CheckReport& r) {
  std::ostringstream out;
  for (const Check& c : r.checks) {
    out << "  " << c.name << ": " << to_string(c.status);
    if (c.instances) out << " (" << c.instances << ")";
    if (!c.witness.empty()) out << " -- " << c.witness;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

int cmd_classify(const Context& ctx) {
  const Classification c = classify(ctx.ban());
  if (ctx.json()) {
    print_json(envelope("classify", to_json(c)));
  } else {
    std::cout << "monotone: " << yes(c.monotone) << ", nice: " << yes(c.nice)
              << ", totally positive: " << yes(c.totally_positive) << '\n';
    if (!c.witness.empty()) std::cout << "why: " << c.witness << '\n';
  }
  return kOk;
}

int cmd_igraph(const Context& ctx) {
  const SignedDigraph g = interaction_graph(ctx.ban());
  if (ctx.dot()) {
    std::cout << to_dot(g, "G");
  } else if (ctx.json()) {
    print_json(envelope("igraph", to_json(g)));
  } else {
    for (const SignedArc& a : g.arcs()) {
      std::cout << a.from + 1 << " -> " << a.to + 1 << " " << to_string(a.sign) << '\n';
    }
  }
  return kOk;
}

int cmd_reformulate(const Context& ctx, const std::string& flip) {
  Reformulation r = flip.empty()
                        ? reformulate_totally_positive(ctx.ban())
                        : Reformulation{flip_transform(ctx.ban(), [&] {
                                          AutomatonSet s;
                                          for (Automaton i : parse_ids(flip, ctx.n())) s.insert(i);
                                          return s;
                                        }()),
                                        {}};
  if (!flip.empty()) {
    for (Automaton i : parse_ids(flip, ctx.n())) r.flipped.insert(i);
  }
  const Classification c = classify(r.ban);
  if (ctx.json()) {
    print_json(envelope("reformulate", {{"flipped", to_json(r.flipped)},
                                        {"ban", r.ban.to_text()},
                                        {"classification", to_json(c)}}));
  } else {
    std::cout << "# flipped " << r.flipped.to_string() << "; totally positive: "
              << yes(c.totally_positive) << '\n'
              << r.ban.to_text();
  }
  return kOk;
}

void print_trajectory(const Trajectory& t) {
  std::cout << "length " << t.length() << '\n' << "moves " << join_ids(t.moves) << '\n';
  const auto cs = t.configs();
  for (std::size_t s = 0; s < cs.size(); ++s) {
    std::cout << "x(" << s << ") = " << cs[s].to_string();
    if (s < t.length()) {
      std::cout << "  " << (nabla(cs[s], t.moves[s]) > 0 ? "+" : "-") << t.moves[s] + 1;
    }
    std::cout << '\n';
  }
}

int cmd_shortest(const Context& ctx) {
  const Configuration x = ctx.initial();
  const Configuration y = ctx.config(ctx.c.y, "target configuration");
  const auto t = shortest_trajectory(ctx.ban(), x, y);
  if (!t) {
    if (ctx.json()) {
      print_json(envelope("shortest", {{"reachable", false}}));
    } else {
      std::cout << y.to_string() << " is not reachable from " << x.to_string() << '\n';
    }
    return kInfeasible;
  }
  if (ctx.json()) {
    json j = to_json(*t);
    j["reachable"] = true;
    j["length"] = t->length();
    print_json(envelope("shortest", j));
  } else {
    print_trajectory(*t);
  }
  return kOk;
}

int cmd_reversibility(const Context& ctx) {
  const auto r = requires_reversibility(ctx.ban(), ctx.initial(),
                                        ctx.config(ctx.c.y, "target configuration"), ctx.c.cap);
  if (ctx.json()) {
    print_json(envelope("reversibility", to_json(r)));
  } else {
    std::cout << "distance " << r.distance << ", hamming " << r.hamming << '\n'
              << "shortest trajectories: " << r.shortest_count << (r.truncated ? " (truncated)" : "")
              << '\n'
              << "requires reversibility: " << yes(r.all_shortest_long) << '\n'
              << "first shortest: " << join_ids(r.shortest.moves) << '\n';
  }
  return kOk;
}

int cmd_attractors(const Context& ctx) {
  const TransitionGraph g(ctx.ban());
  const AttractorSet a = attractors(g);
  if (ctx.dot()) {
    std::cout << to_dot(g, "transitions");
  } else if (ctx.json()) {
    print_json(envelope("attractors", to_json(a)));
  } else {
    std::cout << a.attractors.size() << " attractor(s), " << a.stable_count() << " stable\n";
    for (std::size_t k = 0; k < a.attractors.size(); ++k) {
      const Attractor& at = a.attractors[k];
      std::cout << "[" << k + 1 << "] " << to_string(at.kind) << ":";
      for (std::uint64_t m : at.members) std::cout << ' ' << Configuration(ctx.n(), m).to_string();
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_hamiltonian(const Context& ctx) {
  const auto t = hamiltonian_shortest(ctx.ban());
  const Classification c = classify(ctx.ban());
  if (ctx.json()) {
    json j = {{"found", t.has_value()}, {"nice", c.nice}};
    if (t) j["trajectory"] = to_json(*t);
    print_json(envelope("hamiltonian", j));
  } else if (t) {
    std::cout << "Hamiltonian shortest trajectory found; nice: " << yes(c.nice) << '\n';
    print_trajectory(*t);
  } else {
    std::cout << "no Hamiltonian shortest trajectory; nice: " << yes(c.nice) << '\n';
  }
  return t && c.nice ? kFinding : kOk;
}

int cmd_causality(const Context& ctx) {
  const Trajectory t = ctx.trajectory();
  const TauForest f = tau_forest(ctx.ban(), t);
  const CheckReport checks = verify_causality(ctx.ban(), t);
  if (ctx.dot()) {
    std::cout << anti_graph_dot(f, t);
  } else if (ctx.json()) {
    json steps = to_json(f, t);
    json kappas = json::array();
    for (std::size_t s = 0; s < t.length(); ++s) kappas.push_back(kappa(ctx.ban(), t, s));
    steps["kappa"] = kappas;
    steps["g_tau"] = to_json(g_tau(ctx.ban(), t, f));
    steps["checks"] = to_json(checks);
    print_json(envelope("causality", steps));
  } else {
    for (std::size_t s = 0; s < t.length(); ++s) {
      std::cout << "t=" << s << " automaton " << t.moves[s] + 1 << " " << to_string(f.kind[s]);
      if (f.tau[s]) std::cout << " tau=" << *f.tau[s];
      std::cout << " kappa={";
      const auto k = kappa(ctx.ban(), t, s);
      for (std::size_t q = 0; q < k.size(); ++q) std::cout << (q ? "," : "") << k[q];
      std::cout << "} tree=" << f.tree[s] << '\n';
    }
    std::cout << f.tree_count << " tree(s)\nchecks:\n" << check_lines(checks);
  }
  return checks.ok() ? kOk : kFinding;
}

int cmd_potentials(const Context& ctx) {
  const Streamline line = ctx.streamline();
  const CarrierTable table = carrier_tables(ctx.ban(), line);
  if (ctx.c.format == "csv") {
    std::cout << carrier_csv(table);
  } else if (ctx.json()) {
    json j = to_json(table);
    j["streamline"] = to_json(line, ctx.ban());
    print_json(envelope("potentials", j));
  } else {
    for (Automaton j = 0; j < table.n; ++j) {
      std::cout << Potential{0, j}.to_string();
      for (std::size_t s = 0; s <= table.steps(); ++s) {
        std::cout << "  R*_" << j + 1 << "(" << s << ") = " << table.at(j, s).to_string();
      }
      std::cout << '\n';
    }
  }
  return kOk;
}

int cmd_survivors(const Context& ctx) {
  const Streamline line = ctx.streamline();
  const SurvivorReport r = survivors(ctx.ban(), line);
  if (ctx.json()) {
    json lost = json::object();
    for (Automaton j = 0; j < ctx.n(); ++j) {
      if (r.lost[j]) lost[std::to_string(j + 1)] = *r.lost[j];
    }
    print_json(envelope("survivors", {{"survivors", to_json(r.survivors)}, {"lost_at", lost}}));
  } else {
    std::cout << "survivors: " << r.survivors.to_string() << '\n';
    for (Automaton j = 0; j < ctx.n(); ++j) {
      if (r.lost[j]) std::cout << Potential{0, j}.to_string() << " lost at t=" << *r.lost[j] << '\n';
    }
  }
  return kOk;
}

int cmd_super_survivors(const Context& ctx) {
  const Streamline line = ctx.streamline();
  const AutomatonSet s = super_survivors(ctx.ban(), line);
  if (ctx.json()) {
    print_json(envelope("super-survivors", {{"super_survivors", to_json(s)}}));
  } else {
    std::cout << "super-survivors: " << s.to_string() << '\n';
  }
  return kOk;
}

int print_schedule(const Context& ctx, const ScheduleReport& r) {
  if (ctx.json()) {
    print_json(envelope("schedule", to_json(r)));
  } else {
    std::cout << r.scheduler << ": " << to_string(r.status) << '\n';
    for (const auto& why : r.reasons) std::cout << "  hypothesis: " << why << '\n';
    if (!r.finding.empty()) std::cout << "  finding: " << r.finding << '\n';
    for (const auto& e : r.retarget_log) {
      std::cout << "  retarget at " << e.step << ": " << e.from.to_string() << " -> "
                << e.to.to_string() << '\n';
    }
    if (r.trajectory) {
      std::cout << "bound " << r.bound << ", achieved " << r.achieved;
      if (r.bfs_distance) std::cout << ", BFS distance " << *r.bfs_distance;
      std::cout << '\n';
      print_trajectory(*r.trajectory);
    }
  }
  switch (r.status) {
    case ScheduleStatus::ok: return kOk;
    case ScheduleStatus::hypothesis_violated: return kInfeasible;
    case ScheduleStatus::finding: return kFinding;
  }
  return kOk;
}

int cmd_schedule(const Context& ctx, const std::string& which, bool attractor_mode) {
  const Configuration x = ctx.initial();
  if (which == "to-attractor") {
    const AttractorSet atts = attractors(ctx.ban());
    const Configuration y = ctx.config(ctx.c.y, "a configuration of the attractor");
    const auto a = atts.attractor_of(y.bits());
    if (!a) throw Error(ErrorCode::not_recurrent_destination, y.to_string() + " is not recurrent");
    return print_schedule(ctx, schedule_to_attractor(ctx.ban(), x, atts.attractors[*a]));
  }
  const Configuration y = ctx.config(ctx.c.y, "target configuration");
  if (which == "uniform-favour") return print_schedule(ctx, schedule_uniform_favour(ctx.ban(), x, y));
  if (which == "all-positive") {
    return print_schedule(ctx, schedule_all_positive(ctx.ban(), x, y, attractor_mode));
  }
  if (which == "acyclic-favour") return print_schedule(ctx, schedule_acyclic_favour(ctx.ban(), x, y));
  if (which == "to-stable") return print_schedule(ctx, schedule_to_stable(ctx.ban(), x, y));
  if (which == "nice-scc") return print_schedule(ctx, schedule_nice_scc(ctx.ban(), x, y));
  throw UsageError("unknown scheduler " + which);
}

int cmd_bounds(const Context& ctx) {
  const BoundsReport r = bounds_suite(ctx.ban());
  if (ctx.json()) {
    print_json(envelope("bounds", to_json(r)));
  } else {
    std::cout << "shape: " << to_string(r.shape) << ", n = " << r.n << '\n'
              << "max configuration distance: " << r.max_pair_distance << '\n'
              << "max attractor distance: " << r.max_attractor_distance << '\n'
              << "max recurrent distance: " << r.max_recurrent_distance << '\n'
              << "attractors: " << r.stable_attractors << " stable, " << r.cyclic_attractors
              << " cyclic\nchecks:\n"
              << check_lines(r.checks);
  }
  const bool gating_ok = std::none_of(r.checks.checks.begin(), r.checks.checks.end(), [](const Check& c) {
    return c.status == CheckStatus::violated && c.name.rfind("update_profile", 0) != 0;
  });
  return gating_ok ? kOk : kFinding;
}

int cmd_conjecture(const Context& ctx) {
  const Configuration x = ctx.initial();
  const AttractorSet atts = attractors(ctx.ban());
  std::vector<std::size_t> which;
  if (!ctx.c.y.empty()) {
    const Configuration y = ctx.config(ctx.c.y, "recurrent configuration");
    const auto a = atts.attractor_of(y.bits());
    if (!a) throw Error(ErrorCode::not_recurrent_destination, y.to_string() + " is not recurrent");
    which.push_back(*a);
  } else {
    const TransitionGraph g(ctx.ban());
    const auto dist = distances_from(g, x.bits());
    for (std::size_t k = 0; k < atts.attractors.size(); ++k) {
      for (std::uint64_t m : atts.attractors[k].members) {
        if (dist[m] != kUnreachable) {
          which.push_back(k);
          break;
        }
      }
    }
  }
  json results = json::array();
  for (std::size_t k : which) {
    const ConjectureResult r = survivor_only_search(ctx.ban(), x, atts.attractors[k], ctx.c.cap);
    if (ctx.json()) {
      json j = to_json(r);
      j["attractor"] = k + 1;
      results.push_back(j);
    } else {
      std::cout << "attractor [" << k + 1 << "]: " << to_string(r.verdict) << " (distance "
                << r.distance << ", " << r.examined << " shortest trajectories examined"
                << (r.truncated ? ", truncated" : "") << ")\n";
      if (r.witness) std::cout << "  moves " << join_ids(r.witness->moves) << '\n';
    }
  }
  if (ctx.json()) print_json(envelope("conjecture1", {{"results", results}, {"cap", ctx.c.cap}}));
  return kOk;
}

int cmd_verify_all(const Context& ctx, SuiteOptions opts, bool quick,
                   const std::string& only) {
  std::vector<SuiteResult> results;
  auto want = [&](const std::string& s) { return only.empty() || only == s; };
  const std::size_t base = opts.instances;
  if (want("identities")) {
    SuiteOptions o = opts;
    o.instances = quick ? 3 : std::max<std::size_t>(base / 50, 3);
    o.max_n = 8;
    results.push_back(run_identity_suite(o));
  }
  if (want("hamiltonian")) results.push_back(run_hamiltonian_suite(opts));
  if (want("properties")) results.push_back(run_property_suite(opts));
  if (want("bounds")) {
    SuiteOptions o = opts;
    o.instances = quick ? 1 : 3;
    results.push_back(run_bounds_suite(o, 2, quick ? 6 : 10));
  }
  if (want("schedulers")) results.push_back(run_scheduler_suite(opts));
  if (want("conjecture")) results.push_back(run_conjecture_suite(opts, quick ? 3 : 4));
  if (results.empty()) throw UsageError("unknown suite " + only);

  bool ok = true;
  json all = json::array();
  for (const SuiteResult& r : results) {
    ok &= r.ok();
    all.push_back(to_json(r));
  }
  if (ctx.json()) {
    print_json(envelope("verify-all", {{"seed", opts.seed},
                                       {"instances", opts.instances},
                                       {"max_n", opts.max_n},
                                       {"enumeration_cap", opts.enumeration_cap},
                                       {"ok", ok},
                                       {"suites", all}}));
  } else {
    std::cout << "seed " << opts.seed << ", " << opts.instances << " instances, n <= " << opts.max_n
              << '\n';
    std::printf("%-12s %-32s %9s %9s %9s\n", "suite", "check", "verified", "violated", "n/a");
    for (const SuiteResult& r : results) {
      for (const auto& [name, t] : r.checks) {
        std::printf("%-12s %-32s %9zu %9zu %9zu\n", r.name.c_str(), name.c_str(), t.verified,
                    t.violated, t.not_applicable);
      }
      for (const auto& [name, v] : r.counters) {
        std::printf("%-12s   %-30s %9zu\n", r.name.c_str(), name.c_str(), v);
      }
      std::printf("%-12s %s in %.1fs\n", r.name.c_str(), r.ok() ? "PASS" : "FAIL", r.seconds);
      for (const Witness& w : r.witnesses) {
        std::cout << "  witness " << w.check << " instance " << w.instance << ": " << w.detail << '\n';
      }
    }
  }
  return ok ? kOk : kFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean automata networks: dynamics, causality, potentials and schedulers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Context ctx;
  std::function<int()> action;
  auto& c = ctx.c;

  auto with_ban = [&](CLI::App* sub) {
    sub->add_option("ban", c.ban_path, "network file (.ban)")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot", "csv"}));
    return sub;
  };
  auto with_x = [&](CLI::App* sub) {
    sub->add_option("x", c.x, "initial configuration (default: the file's #@init line)");
    return sub;
  };
  auto with_xy = [&](CLI::App* sub) {
    sub->add_option("x", c.x, "initial configuration")->required();
    sub->add_option("y", c.y, "target configuration")->required();
    return sub;
  };

  auto* classify_cmd = with_ban(app.add_subcommand("classify", "monotone / nice / totally positive"));
  classify_cmd->callback([&] { action = [&] { return cmd_classify(ctx); }; });

  auto* igraph = with_ban(app.add_subcommand("igraph", "signed interaction graph"));
  igraph->callback([&] { action = [&] { return cmd_igraph(ctx); }; });

  std::string flip_set;
  auto* reform = with_ban(app.add_subcommand("reformulate", "relabel states to make the network totally positive"));
  reform->add_option("--flip", flip_set, "automata whose states are exchanged, e.g. 1,3");
  reform->callback([&] { action = [&] { return cmd_reformulate(ctx, flip_set); }; });

  auto* shortest = with_xy(with_ban(app.add_subcommand("shortest", "lexicographically first shortest trajectory")));
  shortest->callback([&] { action = [&] { return cmd_shortest(ctx); }; });

  auto* rev = with_xy(with_ban(app.add_subcommand("reversibility", "whether every shortest trajectory is long")));
  rev->add_option("--cap", c.cap, "enumeration cap");
  rev->callback([&] { action = [&] { return cmd_reversibility(ctx); }; });

  auto* atts = with_ban(app.add_subcommand("attractors", "terminal strongly connected components"));
  atts->callback([&] { action = [&] { return cmd_attractors(ctx); }; });

  auto* ham = with_ban(app.add_subcommand("hamiltonian", "search a shortest trajectory through every configuration"));
  ham->callback([&] { action = [&] { return cmd_hamiltonian(ctx); }; });

  auto* caus = with_x(with_ban(app.add_subcommand("causality", "tau and kappa causality of a trajectory")));
  caus->add_option("--moves", c.moves, "moving automata, e.g. 1,3,5")->required();
  caus->callback([&] { action = [&] { return cmd_causality(ctx); }; });

  for (const char* name : {"potentials", "survivors", "super-survivors"}) {
    auto* sub = with_x(with_ban(app.add_subcommand(name, std::string(name) == "potentials"
                                                             ? "carrier tables of the original potentials"
                                                             : std::string("original potentials that ") +
                                                                   (std::string(name) == "survivors"
                                                                        ? "survive"
                                                                        : "no further update can erase"))));
    sub->add_option("--updates", c.updates, "updated automata, ineffective updates allowed");
    sub->add_option("--moves", c.moves, "moving automata of a trajectory");
    const std::string n = name;
    sub->callback([&, n] {
      action = [&, n] {
        if (n == "potentials") return cmd_potentials(ctx);
        if (n == "survivors") return cmd_survivors(ctx);
        return cmd_super_survivors(ctx);
      };
    });
  }

  std::string which;
  bool attractor_mode = false;
  auto* sched = app.add_subcommand("schedule", "constructive schedulers");
  sched->add_option("scheduler", which, "uniform-favour, all-positive, acyclic-favour, to-stable, to-attractor, nice-scc")
      ->required()
      ->check(CLI::IsMember({"uniform-favour", "all-positive", "acyclic-favour", "to-stable", "to-attractor", "nice-scc"}));
  with_xy(with_ban(sched));
  sched->add_flag("--attractor-mode", attractor_mode, "all-positive: report the stable configurations");
  sched->callback([&] { action = [&] { return cmd_schedule(ctx, which, attractor_mode); }; });

  auto* bounds = with_ban(app.add_subcommand("bounds", "distance bounds for paths, cycles and acyclic networks"));
  bounds->callback([&] { action = [&] { return cmd_bounds(ctx); }; });

  auto* conj = with_x(with_ban(app.add_subcommand("conjecture1", "search a shortest trajectory transmitting only super-survivor potential")));
  conj->add_option("y", c.y, "recurrent configuration (default: every reachable attractor)");
  conj->add_option("--cap", c.cap, "enumeration cap");
  conj->callback([&] { action = [&] { return cmd_conjecture(ctx); }; });

  SuiteOptions opts;
  opts.instances = 200;
  bool quick = false;
  std::string only;
  std::string bundle_dir;
  auto* verify = app.add_subcommand("verify-all", "randomised and exhaustive property suites");
  verify->add_option("--seed", opts.seed, "random seed");
  verify->add_option("--instances", opts.instances, "random instances per suite");
  verify->add_option("--max-n", opts.max_n, "largest random network")->check(CLI::Range(2, 10));
  verify->add_option("--cap", opts.enumeration_cap, "enumeration cap per search");
  verify->add_option("--suite", only, "run one suite only");
  verify->add_option("--bundle-dir", bundle_dir, "directory for witness bundles");
  verify->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--quick", quick, "smaller sizes");
  verify->callback([&] {
    action = [&] {
      if (!bundle_dir.empty()) opts.bundle_dir = bundle_dir;
      return cmd_verify_all(ctx, opts, quick, only);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (!c.ban_path.empty()) ctx.open();
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_for(e.code());
  }
}
