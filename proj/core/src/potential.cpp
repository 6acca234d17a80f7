#include "bankit/potential.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "bankit/core.hpp"
#include "bankit/error.hpp"
#include "bankit/graph.hpp"

namespace bankit {

bool transmits(const Ban& ban, const Configuration& x, Automaton j,
               Automaton i) {
  const ArcSign s = ban.arc_sign(j, i);
  if (s == ArcSign::absent) return false;
  if (s == ArcSign::both) {
    throw Error(ErrorCode::non_monotone_arc,
                "arc (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                    ") has both signs");
  }
  const bool after = ban.eval(i, x);
  // nabla(x', i) is +1 when x'_i = 0.
  const int moved_to = after ? -1 : 1;
  return sign_value(s) == nabla(x, j) * moved_to;
}

std::string Potential::to_string() const {
  return "<" + std::to_string(birth) + "," + std::to_string(automaton + 1) + ">";
}

std::optional<std::size_t> CarrierTable::loss_time(Automaton j) const {
  for (std::size_t t = 0; t < sets[j].size(); ++t) {
    if (sets[j][t].empty()) return t;
  }
  return std::nullopt;
}

AutomatonSet CarrierTable::survivors() const {
  AutomatonSet s;
  for (Automaton j = 0; j < n; ++j) {
    if (!sets[j].back().empty()) s.insert(j);
  }
  return s;
}

namespace {

void check_line(const Ban& ban, const Streamline& line) {
  if (line.x0.size() != ban.size()) {
    throw Error(ErrorCode::length_mismatch, "initial configuration has the wrong length");
  }
  for (Automaton k : line.updates) {
    if (k >= ban.size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "update of automaton " + std::to_string(k + 1) + " out of range");
    }
  }
}

// Carrier set after updating k in x.
AutomatonSet advance(const Ban& ban, const Configuration& x, Automaton k,
                     AutomatonSet carried) {
  bool inherits = false;
  for (Automaton j : (carried & ban.in_neighbours(k)).members()) {
    if (transmits(ban, x, j, k)) {
      inherits = true;
      break;
    }
  }
  carried.erase(k);
  if (inherits) carried.insert(k);
  return carried;
}

}  // namespace

CarrierTable carrier_tables(const Ban& ban, const Streamline& line) {
  check_line(ban, line);
  const std::size_t n = ban.size();
  const auto configs = line.configs(ban);
  CarrierTable table;
  table.n = n;
  table.sets.assign(n, std::vector<AutomatonSet>(line.length() + 1));
  for (Automaton j = 0; j < n; ++j) {
    table.sets[j][0] = AutomatonSet::single(j);
    for (std::size_t t = 0; t < line.length(); ++t) {
      table.sets[j][t + 1] =
          advance(ban, configs[t], line.updates[t], table.sets[j][t]);
    }
  }
  return table;
}

PotentialTracker::PotentialTracker(const Ban& ban, Streamline line)
    : ban_(&ban), line_(std::move(line)) {
  check_line(ban, line_);
  configs_ = line_.configs(ban);
  birth_at_.assign(line_.length() + 1, std::vector<std::size_t>(ban.size(), 0));
  for (std::size_t t = 0; t < line_.length(); ++t) {
    birth_at_[t + 1] = birth_at_[t];
    birth_at_[t + 1][line_.updates[t]] = t + 1;
  }
  memo_.resize(ban.size() + line_.length());
}

Potential PotentialTracker::potential_at(Automaton i, std::size_t t) const {
  return {birth_at_.at(t).at(i), i};
}

std::vector<Potential> PotentialTracker::all_potentials() const {
  std::vector<Potential> out;
  for (Automaton j = 0; j < ban_->size(); ++j) out.push_back({0, j});
  for (std::size_t s = 0; s < line_.length(); ++s) {
    out.push_back({s + 1, line_.updates[s]});
  }
  return out;
}

std::size_t PotentialTracker::memo_index(const Potential& p) const {
  if (p.birth == 0) return p.automaton;
  if (p.birth > line_.length() || line_.updates[p.birth - 1] != p.automaton) {
    throw Error(ErrorCode::index_out_of_range,
                "no potential " + p.to_string() + " on this streamline");
  }
  return ban_->size() + p.birth - 1;
}

std::vector<Potential> PotentialTracker::parents(const Potential& p) const {
  (void)memo_index(p);
  std::vector<Potential> out;
  if (p.birth == 0) return out;
  const std::size_t s = p.birth - 1;
  const Automaton i = p.automaton;
  for (Automaton j : ban_->in_neighbours(i).members()) {
    if (transmits(*ban_, configs_[s], j, i)) out.push_back(potential_at(j, s));
  }
  return out;
}

const std::vector<AutomatonSet>& PotentialTracker::carriers(
    const Potential& p) const {
  auto& slot = memo_[memo_index(p)];
  if (!slot) {
    std::vector<AutomatonSet> sets(line_.length() + 1);
    sets[p.birth] = AutomatonSet::single(p.automaton);
    for (std::size_t t = p.birth; t < line_.length(); ++t) {
      sets[t + 1] = advance(*ban_, configs_[t], line_.updates[t], sets[t]);
    }
    slot = std::move(sets);
  }
  return *slot;
}

Charge charge(const PotentialTracker& tracker, Automaton i, std::size_t t) {
  Charge c;
  const Potential here = tracker.potential_at(i, t);
  c.direct = tracker.parents(here);
  // Ancestors, including the potential itself.
  std::vector<Potential> stack{here};
  while (!stack.empty()) {
    const Potential p = stack.back();
    stack.pop_back();
    if (std::find(c.inherited.begin(), c.inherited.end(), p) != c.inherited.end()) {
      continue;
    }
    c.inherited.push_back(p);
    for (const Potential& q : tracker.parents(p)) stack.push_back(q);
  }
  std::sort(c.direct.begin(), c.direct.end());
  std::sort(c.inherited.begin(), c.inherited.end());
  for (const auto& p : c.direct) {
    if (p.original()) c.direct_original.push_back(p);
  }
  for (const auto& p : c.inherited) {
    if (p.original()) c.inherited_original.push_back(p);
  }
  return c;
}

Charge charge(const Ban& ban, const Streamline& line, Automaton i,
              std::size_t t) {
  return charge(PotentialTracker(ban, line), i, t);
}

SurvivorReport survivors(const Ban& ban, const Streamline& line) {
  const CarrierTable table = carrier_tables(ban, line);
  SurvivorReport r;
  r.survivors = table.survivors();
  for (Automaton j = 0; j < ban.size(); ++j) r.lost.push_back(table.loss_time(j));
  return r;
}

SurvivorReport survivors(const Ban& ban, const Trajectory& traj) {
  validate_trajectory(ban, traj);
  return survivors(ban, Streamline::of(traj));
}

bool can_be_lost(const Ban& ban, const Configuration& y, AutomatonSet carried) {
  const std::size_t n = ban.size();
  if (n > 32) {
    throw Error(ErrorCode::too_large, "carrier search is limited to 32 automata");
  }
  if (carried.empty()) return true;
  // Breadth-first search over (configuration, carrier set) pairs.
  // Both halves fit in 32 bits for any network small enough to search.
  std::unordered_set<std::uint64_t> seen;
  auto visit = [&](std::uint64_t x, std::uint64_t mask) {
    return seen.insert((x << 32) | mask).second;
  };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> queue{{y.bits(), carried.mask()}};
  visit(y.bits(), carried.mask());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [xb, mask] = queue[head];
    const Configuration x(n, xb);
    for (Automaton k = 0; k < n; ++k) {
      const AutomatonSet next = advance(ban, x, k, AutomatonSet(mask));
      if (next.empty()) return true;
      const std::uint64_t nx = step(ban, x, k).bits();
      if (visit(nx, next.mask())) queue.emplace_back(nx, next.mask());
    }
  }
  return false;
}

AutomatonSet super_survivors(const Ban& ban, const AttractorSet& atts,
                             const Streamline& line) {
  const CarrierTable table = carrier_tables(ban, line);
  const Configuration y = line.configs(ban).back();
  if (!atts.recurrent(y.bits())) {
    throw Error(ErrorCode::not_recurrent_destination,
                y.to_string() + " is not a recurrent configuration");
  }
  AutomatonSet out;
  for (Automaton j : table.survivors().members()) {
    if (!can_be_lost(ban, y, table.sets[j].back())) out.insert(j);
  }
  return out;
}

AutomatonSet super_survivors(const Ban& ban, const Streamline& line) {
  if (ban.size() > kSuperSurvivorMaxN) {
    throw Error(ErrorCode::too_large, "super-survivor search is limited to " +
                                          std::to_string(kSuperSurvivorMaxN) +
                                          " automata");
  }
  return super_survivors(ban, attractors(ban), line);
}

AutomatonSet super_survivors(const Ban& ban, const Trajectory& traj) {
  validate_trajectory(ban, traj);
  return super_survivors(ban, Streamline::of(traj));
}

CheckReport verify_potentials(const Ban& ban, const Trajectory& traj,
                                    PotentialCheckOptions options) {
  CheckReport report;
  Check& lineage_sign = report.add("lineage_sign");
  Check& nonempty_charge = report.add("nonempty_charge");
  Check& same_move = report.add("same_potential_same_move");
  Check& fresh_potential = report.add("fresh_potential");
  Check& survivor_transmission = report.add("survivor_transmission");
  Check& favourable_survivor = report.add("favourable_survivor");
  Check& inheritance = report.add("inheritance");
  Check& monotone_loss = report.add("monotone_loss");
  Check& bound = report.add("survivor_bound");

  validate_trajectory(ban, traj);
  const std::size_t n = ban.size();
  const std::size_t T = traj.length();
  const PotentialTracker tracker(ban, Streamline::of(traj));
  const auto& x = tracker.configs();
  const SignedDigraph g = interaction_graph(ban);
  const auto star = path_sign_matrix(g);
  const bool nice = classify(ban).nice;
  const auto potentials = tracker.all_potentials();

  // A path of the given sign from j to i, or the empty path when p is still
  // carried by its own automaton.
  auto lineage_ok = [&](const Potential& p, Automaton i, std::size_t t, int sign) {
    if (i == p.automaton && tracker.potential_at(i, t) == p) return sign == 1;
    const PathSign s = star[p.automaton][i];
    return s == PathSign::contradictory ||
           (sign == 1 ? s == PathSign::positive : s == PathSign::negative);
  };

  for (const Potential& p : potentials) {
    const auto& sets = tracker.carriers(p);
    const int born_sign = nabla(x[p.birth], p.automaton);
    bool emptied = false;
    for (std::size_t t = p.birth; t <= T; ++t) {
      if (p.original()) {
        if (emptied) {
          monotone_loss.expect(sets[t].empty(), "original " + p.to_string() +
                                                    " is carried again at " +
                                                    std::to_string(t));
        }
        emptied |= sets[t].empty();
      }
      for (Automaton i : sets[t].members()) {
        const int sign = born_sign * nabla(x[t], i);
        lineage_sign.expect(lineage_ok(p, i, t, sign),
                  p.to_string() + " is carried by " + std::to_string(i + 1) +
                      " at " + std::to_string(t) + " without a path of sign " +
                      std::to_string(sign));
      }
    }
    if (nice) {
      for (Automaton i = 0; i < n; ++i) {
        std::optional<bool> state;
        for (std::size_t t = p.birth; t <= T; ++t) {
          if (!sets[t].contains(i)) continue;
          if (state && *state != x[t][i]) {
            same_move.fail(std::to_string(i + 1) + " carries " + p.to_string() +
                    " in both states (again at " + std::to_string(t) + ")");
          } else {
            same_move.pass();
          }
          state = x[t][i];
        }
      }
    }
  }

  // Moves: inheritance, charge after the first update, fresh potential.
  std::vector<std::vector<Potential>> earlier(n);
  for (std::size_t s = 0; s < T; ++s) {
    const Automaton i = traj.moves[s];
    const Potential born{s + 1, i};
    auto parents = tracker.parents(born);
    inheritance.expect(!parents.empty(), "the move of " + std::to_string(i + 1) +
                                             " at " + std::to_string(s) +
                                             " inherits nothing");
    std::sort(parents.begin(), parents.end());
    const bool fresh = std::any_of(parents.begin(), parents.end(), [&](const Potential& q) {
      return std::find(earlier[i].begin(), earlier[i].end(), q) == earlier[i].end();
    });
    fresh_potential.expect(fresh, "the move of " + std::to_string(i + 1) + " at " +
                         std::to_string(s) + " inherits only potential it had before");
    for (const auto& q : parents) earlier[i].push_back(q);
    // Potentials i held before its first update have no parents.

    if (options.shortest) {
      for (const Potential& q : parents) {
        survivor_transmission.expect(!tracker.carriers(q)[T].empty(),
                   q.to_string() + " is transmitted to " + std::to_string(i + 1) +
                       " at " + std::to_string(s) + " but does not survive");
      }
    }
  }
  for (std::size_t s = 0; s < T; ++s) {
    const Automaton i = traj.moves[s];
    for (std::size_t t = s + 1; t <= T; ++t) {
      nonempty_charge.expect(!tracker.parents(tracker.potential_at(i, t)).empty(),
                std::to_string(i + 1) + " carries no potential at " + std::to_string(t));
    }
  }

  if (unstable_set(ban, x[T]).empty()) {
    const Configuration& y = x[T];
    for (const Potential& p : potentials) {
      const AutomatonSet final_set = tracker.carriers(p)[T];
      for (Automaton i : final_set.members()) {
        const int sign = bs(x[p.birth][p.automaton]) * bs(y[i]);
        favourable_survivor.expect(lineage_ok(p, i, T, sign),
                   std::to_string(i + 1) + " carries " + p.to_string() +
                       " at the stable destination, which is not favourable to it");
      }
    }
  }

  if (T > 0) {
    const Automaton first = traj.moves[0];
    if (ban.arc_sign(first, first) != ArcSign::negative) {
      std::size_t count = 0;
      for (Automaton j = 0; j < n; ++j) count += tracker.carriers({0, j})[T].empty() ? 0 : 1;
      bound.expect(count + 1 <= n, std::to_string(count) + " original survivors");
    }
  }
  return report;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

bool transmits_only(const Ban& ban, const Trajectory& traj, AutomatonSet supers) {
  const CarrierTable table = carrier_tables(ban, Streamline::of(traj));
  for (std::size_t s = 0; s < traj.length(); ++s) {
    const Automaton k = traj.moves[s];
    for (Automaton j = 0; j < ban.size(); ++j) {
      if (table.sets[j][s + 1].contains(k) && !supers.contains(j)) return false;
    }
  }
  return true;
}

ConjectureResult survivor_only_search(const Ban& ban, const Configuration& x,
                                    const Attractor& a, std::size_t cap) {
  if (ban.size() > kSuperSurvivorMaxN) {
    throw Error(ErrorCode::too_large, "conjecture search is limited to " +
                                          std::to_string(kSuperSurvivorMaxN) +
                                          " automata");
  }
  const TransitionGraph g(ban);
  const auto dist = distances_to(g, a.members);
  ConjectureResult result;
  result.distance = dist[x.bits()];
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> lost_memo;
  std::optional<Trajectory> first;
  const auto e = for_each_shortest(g, dist, x, cap, [&](const Trajectory& t) {
    if (!first) first = t;
    const CarrierTable table = carrier_tables(ban, Streamline::of(t));
    const Configuration y = t.destination();
    AutomatonSet supers;
    for (Automaton j = 0; j < ban.size(); ++j) {
      const AutomatonSet c = table.sets[j].back();
      if (c.empty()) continue;
      const auto key = std::make_pair(y.bits(), c.mask());
      auto it = lost_memo.find(key);
      if (it == lost_memo.end()) it = lost_memo.emplace(key, can_be_lost(ban, y, c)).first;
      if (!it->second) supers.insert(j);
    }
    if (transmits_only(ban, t, supers)) {
      result.witness = t;
      return false;
    }
    return true;
  });
  result.examined = e.visited;
  result.truncated = e.truncated;
  if (result.witness) {
    result.verdict = Verdict::holds;
  } else if (e.truncated) {
    result.verdict = Verdict::inconclusive;
  } else {
    result.verdict = Verdict::counterexample;
    result.witness = first;
  }
  return result;
}

std::string carrier_csv(const CarrierTable& table) {
  std::ostringstream out;
  out << "potential";
  for (std::size_t t = 0; t <= table.steps(); ++t) out << ",t" << t;
  out << "\n";
  for (Automaton j = 0; j < table.n; ++j) {
    out << "\"<0," << j + 1 << ">\"";
    for (const AutomatonSet& s : table.sets[j]) out << ",\"" << s.to_string() << "\"";
    out << "\n";
  }
  return out.str();
}

}  // namespace bankit
