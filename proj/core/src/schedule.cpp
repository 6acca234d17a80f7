#include "bankit/schedule.hpp"

#include <algorithm>
#include <numeric>

#include "bankit/core.hpp"
#include "bankit/error.hpp"
#include "scc.hpp"

namespace bankit {

std::string_view to_string(ScheduleStatus s) {
  switch (s) {
    case ScheduleStatus::ok: return "ok";
    case ScheduleStatus::hypothesis_violated: return "hypothesis-violated";
    case ScheduleStatus::finding: return "finding";
  }
  return "?";
}

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::path: return "path";
    case Shape::positive_cycle: return "positive-cycle";
    case Shape::negative_cycle: return "negative-cycle";
    case Shape::acyclic: return "acyclic";
  }
  return "?";
}

namespace {

std::string name(Automaton i) { return std::to_string(i + 1); }

void violate(ScheduleReport& r, std::string why) {
  r.hypothesis_ok = false;
  r.status = ScheduleStatus::hypothesis_violated;
  r.reasons.push_back(std::move(why));
}

std::string moves_text(const std::vector<Automaton>& moves) {
  std::string s = "[";
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (k) s += ",";
    s += name(moves[k]);
  }
  return s + "]";
}

// Builds the trajectory one move at a time and records the first breakdown.
class Run {
 public:
  Run(const Ban& ban, ScheduleReport& report, const Configuration& x)
      : ban_(ban), report_(report), traj_{x, {}}, x_(x) {}

  [[nodiscard]] const Configuration& x() const { return x_; }
  [[nodiscard]] bool unstable(Automaton i) const { return ban_.eval(i, x_) != x_[i]; }
  [[nodiscard]] bool broken() const { return report_.status != ScheduleStatus::ok; }

  void move(Automaton i) {
    traj_.moves.push_back(i);
    x_ = x_.flipped(i);
  }

  void finding(std::string why) {
    if (broken()) return;
    report_.status = ScheduleStatus::finding;
    report_.finding = std::move(why) + " after moves " + moves_text(traj_.moves);
  }

  // Closes the run against the final target.
  void finish(const Configuration& target) {
    report_.target = target;
    report_.achieved = traj_.length();
    if (!broken() && x_ != target) {
      finding("stopped at " + x_.to_string() + " instead of " + target.to_string());
    }
    if (!broken() && traj_.length() > report_.bound) {
      finding("length " + std::to_string(traj_.length()) + " exceeds the bound " +
              std::to_string(report_.bound));
    }
    if (!broken() && report_.bfs_distance && traj_.length() < *report_.bfs_distance) {
      finding("shorter than the BFS distance " + std::to_string(*report_.bfs_distance));
    }
    if (!broken()) {
      if (auto bad = check_trajectory(ban_, traj_)) {
        finding("invalid trajectory: " + *bad);
      }
    }
    if (!broken()) report_.trajectory = traj_;
  }

 private:
  const Ban& ban_;
  ScheduleReport& report_;
  Trajectory traj_;
  Configuration x_;
};

void check_sizes(const Ban& ban, const Configuration& x, const Configuration& y) {
  if (x.size() != ban.size() || y.size() != ban.size()) {
    throw Error(ErrorCode::length_mismatch,
                "configuration length differs from the number of automata");
  }
}

// Records the BFS distance from x to y when the state space fits; y out of
// reach violates the hypothesis of every scheduler aiming at y.
void check_reachable(ScheduleReport& r, const Ban& ban, const Configuration& x,
                     const Configuration& y) {
  if (ban.size() > state_space_cap()) return;
  const TransitionGraph g(ban);
  const auto dist = distances_from(g, x.bits());
  if (dist[y.bits()] == kUnreachable) {
    violate(r, y.to_string() + " is not reachable from " + x.to_string());
  } else {
    r.bfs_distance = dist[y.bits()];
  }
}

std::optional<FavourGraph> favour_graph_or_violate(ScheduleReport& r, const Ban& ban,
                                                   const Configuration& y) {
  try {
    return favour_graph(ban, y);
  } catch (const Error& e) {
    violate(r, e.what());
    return std::nullopt;
  }
}

std::optional<AutomatonSet> sources_or_violate(ScheduleReport& r, const Ban& ban) {
  try {
    return source_automata(ban);
  } catch (const Error& e) {
    violate(r, e.what());
    return std::nullopt;
  }
}

std::optional<std::vector<Automaton>> order_or_violate(ScheduleReport& r, const Ban& ban,
                                                       const FavourGraph& h) {
  try {
    return favour_order(ban, h);
  } catch (const Error& e) {
    violate(r, std::string("H^T: ") + e.what());
    return std::nullopt;
  }
}

// Sources whose state differs from the target can never reach it.
void check_sources(ScheduleReport& r, AutomatonSet sources, const Configuration& x,
                   const Configuration& y) {
  for (Automaton i : sources.members()) {
    if (x[i] != y[i]) violate(r, "source automaton " + name(i) + " differs from the target");
  }
}

// Repeatedly moves the smallest unstable automaton of `pool` that is away from
// y, preferring `first` when it has candidates.
void greedy_towards(Run& run, const Configuration& y, AutomatonSet pool,
                    AutomatonSet first = {}) {
  while (!run.broken()) {
    std::optional<Automaton> pick;
    for (AutomatonSet kind : {first & pool, pool - first}) {
      for (Automaton i : kind.members()) {
        if (run.x()[i] != y[i] && run.unstable(i)) {
          pick = i;
          break;
        }
      }
      if (pick) break;
    }
    if (!pick) break;
    run.move(*pick);
  }
  for (Automaton i : pool.members()) {
    if (run.x()[i] != y[i]) {
      run.finding("automaton " + name(i) + " is stuck away from its target state");
      return;
    }
  }
}

// Moves i if it is away from y: it must be unstable there.
void ordered_move(Run& run, const Configuration& y, Automaton i) {
  if (run.broken() || run.x()[i] == y[i]) return;
  if (!run.unstable(i)) {
    run.finding("automaton " + name(i) + " is expected unstable in " + run.x().to_string() +
                " but is stable");
    return;
  }
  run.move(i);
}

// Whether every in-neighbour of i other than i itself is in its most
// favourable state in x.
std::optional<Automaton> unfavourable_input(const Ban& ban, const FavourSets& fs,
                                            const Configuration& x, const Configuration& y,
                                            Automaton i) {
  for (Automaton j : ban.in_neighbours(i).members()) {
    if (j == i) continue;
    const bool want = fs.in_plus(j, i) ? y[j] : !y[j];
    if (x[j] != want) return j;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Automaton> favour_order(const Ban& ban, const FavourGraph& h) {
  const std::size_t n = h.size();
  AutomatonSet grounds = source_automata(ban);
  std::vector<std::size_t> indegree(n, 0);
  for (Automaton u = 0; u < n; ++u) {
    for (Automaton v : h.successors[u].members()) {
      if (u != v) ++indegree[v];
    }
  }
  for (Automaton i = 0; i < n; ++i) {
    if (indegree[i] == 0) grounds.insert(i);
  }
  const DepthMap dm = depths(h.shape(), grounds);
  for (Automaton i = 0; i < n; ++i) {
    if (!dm.depth[i]) {
      // Not reachable from any automaton without in-arcs: it sits on a cycle.
      throw Error(ErrorCode::cyclic_beyond_loops,
                  "automaton " + name(i) + " lies on a cycle of H^T");
    }
  }
  std::vector<Automaton> order(n);
  std::iota(order.begin(), order.end(), Automaton{0});
  std::stable_sort(order.begin(), order.end(), [&](Automaton a, Automaton b) {
    return *dm.depth[a] < *dm.depth[b];
  });
  return order;
}

ScheduleReport schedule_uniform_favour(const Ban& ban, const Configuration& x,
                                       const Configuration& y) {
  check_sizes(ban, x, y);
  const std::size_t n = ban.size();
  ScheduleReport r;
  r.scheduler = "uniform-favour";
  r.bound = n;
  FavourSets fs;
  try {
    fs = favour_sets(ban, y);
  } catch (const Error& e) {
    violate(r, e.what());
    return r;
  }
  // Automata without out-arcs count as favouring.
  AutomatonSet favouring;
  for (Automaton j = 0; j < n; ++j) {
    bool plus = false;
    bool minus = false;
    for (Automaton i : ban.out_neighbours(j).members()) {
      plus |= fs.in_plus(j, i);
      minus |= fs.in_minus(j, i);
    }
    if (plus && minus) {
      violate(r, "automaton " + name(j) + " favours some out-neighbours and disfavours others");
    } else if (!minus) {
      favouring.insert(j);
    }
  }
  check_reachable(r, ban, x, y);
  if (!r.hypothesis_ok) return r;

  Run run(ban, r, x);
  greedy_towards(run, y, AutomatonSet::all(n), favouring);
  run.finish(y);
  return r;
}

ScheduleReport schedule_all_positive(const Ban& ban, const Configuration& x,
                                     const Configuration& y, bool attractor_mode) {
  check_sizes(ban, x, y);
  const std::size_t n = ban.size();
  ScheduleReport r;
  r.scheduler = "all-positive";
  r.bound = n;
  FavourSets fs;
  try {
    fs = favour_sets(ban, y);
  } catch (const Error& e) {
    violate(r, e.what());
    return r;
  }
  for (Automaton i = 0; i < n; ++i) {
    if (!fs.minus_in[i].empty()) {
      const Automaton j = fs.minus_in[i].members().front();
      violate(r, "arc (" + name(j) + "," + name(i) + ") is disfavourable");
      break;
    }
  }
  check_reachable(r, ban, x, y);

  std::optional<AttractorSet> atts;
  if (attractor_mode) {
    atts = attractors(ban);
    if (!atts->recurrent(y.bits())) {
      violate(r, y.to_string() + " is not recurrent");
    }
    // The "at most two" count concerns stable configurations that, taken as
    // targets, leave no disfavourable arc.
    for (const Attractor& a : atts->attractors) {
      if (a.kind != AttractorKind::stable) continue;
      const Configuration z(n, a.members.front());
      const FavourSets fz = favour_sets(ban, z);
      if (std::all_of(fz.minus_in.begin(), fz.minus_in.end(),
                      [](const AutomatonSet& s) { return s.empty(); })) {
        r.stable_configurations.push_back(z);
      }
    }
  }
  if (!r.hypothesis_ok) return r;

  Run run(ban, r, x);
  if (attractor_mode) {
    const Attractor& a = atts->attractors[*atts->attractor_of(y.bits())];
    if (a.kind != AttractorKind::stable) {
      run.finding("the attractor of " + y.to_string() + " is cyclic");
    }
    if (is_strongly_connected(interaction_graph(ban)) &&
        r.stable_configurations.size() > 2) {
      run.finding("strongly connected network with " +
                  std::to_string(r.stable_configurations.size()) +
                  " stable configurations free of disfavourable arcs");
    }
  }
  greedy_towards(run, y, AutomatonSet::all(n));
  run.finish(y);
  return r;
}

ScheduleReport schedule_acyclic_favour(const Ban& ban, const Configuration& x,
                                       const Configuration& y) {
  check_sizes(ban, x, y);
  ScheduleReport r;
  r.scheduler = "acyclic-favour";
  r.bound = ban.size();
  const auto sources = sources_or_violate(r, ban);
  const auto h = favour_graph_or_violate(r, ban, y);
  if (!sources || !h) return r;
  r.bound = ban.size() - sources->size();
  const auto order = order_or_violate(r, ban, *h);
  for (Automaton i = 0; i < ban.size(); ++i) {
    if (!sources->contains(i) && x[i] == y[i]) {
      violate(r, "automaton " + name(i) + " already starts in its target state");
    }
  }
  check_sources(r, *sources, x, y);
  check_reachable(r, ban, x, y);
  if (!r.hypothesis_ok) return r;

  Run run(ban, r, x);
  for (Automaton i : *order) {
    if (run.broken()) break;
    if (sources->contains(i) || run.x()[i] == y[i]) continue;
    if (auto j = unfavourable_input(ban, h->sets, run.x(), y, i)) {
      run.finding("condition lost: in-neighbour " + name(*j) + " of " + name(i) +
                  " is not in its most favourable state");
      break;
    }
    ordered_move(run, y, i);
  }
  run.finish(y);
  return r;
}

ScheduleReport schedule_to_stable(const Ban& ban, const Configuration& x,
                                  const Configuration& y) {
  check_sizes(ban, x, y);
  ScheduleReport r;
  r.scheduler = "to-stable";
  r.bound = ban.size();
  const auto sources = sources_or_violate(r, ban);
  const auto h = favour_graph_or_violate(r, ban, y);
  if (!sources || !h) return r;
  r.bound = ban.size() - sources->size();
  const auto order = order_or_violate(r, ban, *h);
  if (!unstable_set(ban, y).empty()) violate(r, y.to_string() + " is not stable");
  check_sources(r, *sources, x, y);
  check_reachable(r, ban, x, y);
  if (!r.hypothesis_ok) return r;

  Run run(ban, r, x);
  for (Automaton i : *order) {
    if (!sources->contains(i)) ordered_move(run, y, i);
  }
  run.finish(y);
  return r;
}

ScheduleReport schedule_to_attractor(const Ban& ban, const Configuration& x,
                                     const Attractor& a) {
  const std::size_t n = ban.size();
  if (x.size() != n) {
    throw Error(ErrorCode::length_mismatch,
                "configuration length differs from the number of automata");
  }
  if (a.members.empty()) {
    throw Error(ErrorCode::index_out_of_range, "empty attractor");
  }
  ScheduleReport r;
  r.scheduler = "to-attractor";
  r.bound = n;

  // Nearest member by Hamming distance, ties by bitstring order.
  Configuration y(n, a.members.front());
  for (std::uint64_t m : a.members) {
    const Configuration c(n, m);
    const std::size_t dc = hd(x, c).size();
    const std::size_t dy = hd(x, y).size();
    if (dc < dy || (dc == dy && lex_less(c, y))) y = c;
  }
  const auto sources = sources_or_violate(r, ban);
  const auto h = favour_graph_or_violate(r, ban, y);
  if (!sources || !h) return r;
  const auto order = order_or_violate(r, ban, *h);
  if (!r.hypothesis_ok) return r;
  if (n <= state_space_cap()) {
    const TransitionGraph g(ban);
    const auto dist = distances_to(g, a.members);
    r.bfs_distance = dist[x.bits()];
  }

  Run run(ban, r, x);
  for (std::size_t step = 0; step < order->size() && !run.broken(); ++step) {
    const Automaton i = (*order)[step];
    if (run.x()[i] == y[i]) continue;
    if (run.unstable(i)) {
      run.move(i);
      continue;
    }
    // i is stable away from y_i: aim at y with i flipped instead.
    if (ban.eval(i, y) == y[i]) {
      run.finding("retarget at " + name(i) + ": automaton is stable in " + y.to_string());
      break;
    }
    const Configuration next = y.flipped(i);
    r.retarget_log.push_back({step, y, next});
    if (!a.contains(next.bits())) {
      run.finding("retarget escaped the attractor: " + next.to_string());
      break;
    }
    y = next;
  }
  run.finish(y);
  if (r.trajectory && hd(x, y).size() != r.achieved) {
    r.trajectory.reset();
    r.status = ScheduleStatus::finding;
    r.finding = "moves do not match the Hamming distance to the final target";
  }
  return r;
}

ScheduleReport schedule_nice_scc(const Ban& ban, const Configuration& x,
                                 const Configuration& y) {
  check_sizes(ban, x, y);
  const std::size_t n = ban.size();
  ScheduleReport r;
  r.scheduler = "nice-scc";
  r.bound = n;
  const Classification cls = classify(ban);
  if (!cls.nice) {
    violate(r, "network is not nice: " + cls.witness);
    return r;
  }
  const auto h = favour_graph_or_violate(r, ban, y);
  if (!h) return r;
  if (!unstable_set(ban, y).empty()) violate(r, y.to_string() + " is not stable");

  // Tarjan ids come in completion order, so decreasing ids follow the
  // condensation from its sources down.
  const auto scc = detail::tarjan(
      n, [&](std::size_t u) { return h->successors[u].mask(); },
      [](std::size_t, std::size_t k) { return k; });
  const auto& comp_of = scc.component;
  const std::size_t count = scc.count;
  std::vector<AutomatonSet> comps(count);
  for (Automaton i = 0; i < n; ++i) comps[comp_of[i]].insert(i);
  for (Automaton u = 0; u < n; ++u) {
    for (Automaton v : h->successors[u].members()) {
      if (u == v || comp_of[u] != comp_of[v]) continue;
      // The H arc (u, v) must come from (u, v) in A_+ only.
      if (!h->sets.in_plus(u, v) || h->sets.in_minus(v, u)) {
        violate(r, "cycle of H^T through (" + name(u) + "," + name(v) +
                       ") uses a disfavourable arc");
        break;
      }
    }
  }
  check_reachable(r, ban, x, y);
  if (!r.hypothesis_ok) return r;

  Run run(ban, r, x);
  for (std::size_t c = count; c-- > 0 && !run.broken();) {
    if (comps[c].size() == 1) {
      ordered_move(run, y, comps[c].members().front());
    } else {
      greedy_towards(run, y, comps[c]);
    }
  }
  run.finish(y);
  return r;
}

FavourableConditions favourable_conditions(const Ban& ban, const Configuration& y, Automaton i) {
  FavourableConditions res;
  const AutomatonSet in = ban.in_neighbours(i);
  if (in.empty()) return res;
  res.applicable = true;
  const FavourSets fs = favour_sets(ban, y);
  // Other automata do not matter for f_i; keep them at y.
  Configuration z = y;
  for (Automaton j : in.members()) {
    z = z.with(j, fs.in_plus(j, i) ? y[j] : !y[j]);
  }
  res.reaches_target = ban.eval(i, z) == y[i];
  // Before its move i is still in state not y_i.
  const Configuration before_z = z.with(i, !y[i]);
  res.unstable_before_move = ban.eval(i, before_z) != before_z[i];
  if (!res.reaches_target) {
    res.counterexample = z;
  } else if (!res.unstable_before_move) {
    res.counterexample = before_z;
  }
  return res;
}

bool favourable_conditions_hold(const Ban& ban, const Configuration& y, Automaton i) {
  const FavourableConditions c = favourable_conditions(ban, y, i);
  return !c.applicable || c.reaches_target;
}

std::optional<Shape> detect_shape(const Ban& ban) {
  const std::size_t n = ban.size();
  const SignedDigraph g = interaction_graph(ban);
  if (n == 0) return std::nullopt;
  if (n == 1) {
    switch (g.sign(0, 0)) {
      case ArcSign::absent:
      case ArcSign::positive: return Shape::path;
      case ArcSign::negative: return Shape::negative_cycle;
      default: return std::nullopt;
    }
  }
  std::vector<std::size_t> in(n, 0);
  std::vector<std::size_t> out(n, 0);
  std::size_t arcs = 0;
  AutomatonSet loops;
  for (const SignedArc& a : g.arcs()) {
    if (a.from == a.to) {
      loops.insert(a.from);
      continue;
    }
    ++in[a.to];
    ++out[a.from];
    ++arcs;
  }
  const bool degrees_ok = std::all_of(in.begin(), in.end(), [](auto d) { return d <= 1; }) &&
                          std::all_of(out.begin(), out.end(), [](auto d) { return d <= 1; });
  // Follows the unique successors from `start`; number of automata visited.
  auto walk = [&](Automaton start) {
    std::size_t seen = 1;
    Automaton u = start;
    while (out[u] == 1) {
      u = (g.successors(u) - AutomatonSet::single(u)).members().front();
      if (u == start) break;
      ++seen;
    }
    return seen;
  };

  if (degrees_ok && arcs == n - 1) {
    const auto head = static_cast<Automaton>(
        std::find(in.begin(), in.end(), std::size_t{0}) - in.begin());
    const bool loops_ok = loops.empty() ||
        (loops == AutomatonSet::single(head) && g.sign(head, head) == ArcSign::positive);
    if (head < n && loops_ok && walk(head) == n) return Shape::path;
  }
  if (degrees_ok && arcs == n && loops.empty() && walk(0) == n) {
    int sign = 1;
    for (const SignedArc& a : g.arcs()) {
      if (a.sign == ArcSign::both) return std::nullopt;
      sign *= sign_value(a.sign);
    }
    return sign > 0 ? Shape::positive_cycle : Shape::negative_cycle;
  }
  if (acyclic_except_loops(g)) {
    for (Automaton i : loops.members()) {
      if (ban.in_neighbours(i) != AutomatonSet::single(i) ||
          g.sign(i, i) != ArcSign::positive) {
        return std::nullopt;
      }
    }
    return Shape::acyclic;
  }
  return std::nullopt;
}

BoundsReport bounds_suite(const Ban& ban) {
  const std::size_t n = ban.size();
  if (n > kBoundsMaxN) {
    throw Error(ErrorCode::too_large,
                "bounds suite is limited to " + std::to_string(kBoundsMaxN) + " automata");
  }
  const auto shape = detect_shape(ban);
  if (!shape) {
    throw Error(ErrorCode::shape_not_recognized,
                "G is neither a single path, a single cycle, nor acyclic except for "
                "source loops");
  }
  BoundsReport rep;
  rep.shape = *shape;
  rep.n = n;
  Check& attractor_bound = rep.checks.add("attractor_distance_at_most_n");
  Check& unique_stable = rep.checks.add("unique_stable_attractor");
  Check& two_fixed = rep.checks.add("two_stable_attractors");
  Check& profile = rep.checks.add("update_profile");
  Check& grounds_profile = rep.checks.add("update_profile_from_grounds");
  Check& within_2n = rep.checks.add("recurrent_within_2n");

  const TransitionGraph g(ban);
  const AttractorSet atts = attractors(g);
  const std::uint64_t N = std::uint64_t{1} << n;
  for (const Attractor& a : atts.attractors) {
    (a.kind == AttractorKind::stable ? rep.stable_attractors : rep.cyclic_attractors)++;
  }
  std::vector<bool> recurrent(N, false);
  for (const Attractor& a : atts.attractors) {
    for (std::uint64_t m : a.members) recurrent[m] = true;
  }

  for (std::uint64_t x = 0; x < N; ++x) {
    const auto dist = distances_from(g, x);
    for (std::uint64_t y = 0; y < N; ++y) {
      if (dist[y] == kUnreachable) continue;
      rep.max_pair_distance = std::max<std::size_t>(rep.max_pair_distance, dist[y]);
      if (recurrent[y]) {
        rep.max_recurrent_distance = std::max<std::size_t>(rep.max_recurrent_distance, dist[y]);
        if (*shape == Shape::negative_cycle) {
          within_2n.expect(dist[y] <= 2 * n, Configuration(n, y).to_string() + " is " +
                                                 std::to_string(dist[y]) + " steps from " +
                                                 Configuration(n, x).to_string());
        }
      }
    }
  }

  // Grounds used by the literal update profile.
  const SignedDigraph ig = interaction_graph(ban);
  std::optional<Automaton> path_head;
  if (*shape == Shape::path) {
    for (Automaton i = 0; i < n; ++i) {
      if ((ig.predecessors(i) - AutomatonSet::single(i)).empty()) path_head = i;
    }
  }
  auto moved_once_iff = [&](const std::vector<std::size_t>& count, auto&& should_move) {
    for (Automaton i = 0; i < n; ++i) {
      if (count[i] != (should_move(i) ? 1U : 0U)) return false;
    }
    return true;
  };

  std::vector<std::size_t> reachable(N, 0);
  std::vector<bool> reaches_stable(N, false);
  for (const Attractor& a : atts.attractors) {
    const auto dto = distances_to(g, a.members);
    for (std::uint64_t xb = 0; xb < N; ++xb) {
      if (dto[xb] == kUnreachable) continue;
      ++reachable[xb];
      if (a.kind == AttractorKind::stable) reaches_stable[xb] = true;
      rep.max_attractor_distance = std::max<std::size_t>(rep.max_attractor_distance, dto[xb]);
      const Configuration x(n, xb);
      attractor_bound.expect(dto[xb] <= n, x.to_string() + " is " + std::to_string(dto[xb]) +
                                               " steps from its attractor");
      if (*shape == Shape::acyclic) continue;

      const Trajectory t = descend(g, dto, x);
      const Configuration y = t.destination();
      std::vector<std::size_t> count(n, 0);
      for (Automaton i : t.moves) ++count[i];
      const std::string where = "from " + x.to_string() + " moves " + moves_text(t.moves);
      profile.expect(moved_once_iff(count, [&](Automaton i) { return x[i] != y[i]; }),
                     where);
      bool literal = false;
      for (Automaton gr = 0; gr < n && !literal; ++gr) {
        if (path_head && gr != *path_head) continue;
        if (*shape == Shape::positive_cycle && x[gr] != y[gr]) continue;
        literal = moved_once_iff(count, [&](Automaton i) { return x[i] != x[gr]; });
      }
      grounds_profile.expect(literal, where);
    }
  }

  if (*shape == Shape::path || *shape == Shape::acyclic) {
    for (std::uint64_t xb = 0; xb < N; ++xb) {
      unique_stable.expect(reachable[xb] == 1 && reaches_stable[xb],
                           Configuration(n, xb).to_string() + " reaches " +
                               std::to_string(reachable[xb]) + " attractor(s)");
    }
  }
  if (*shape == Shape::positive_cycle) {
    two_fixed.expect(rep.stable_attractors == 2 && rep.cyclic_attractors == 0,
                     std::to_string(rep.stable_attractors) + " stable and " +
                         std::to_string(rep.cyclic_attractors) + " cyclic attractors");
  }
  return rep;
}

}  // namespace bankit
