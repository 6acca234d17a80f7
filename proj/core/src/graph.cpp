#include "bankit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "bankit/core.hpp"
#include "bankit/error.hpp"
#include "scc.hpp"

namespace bankit {

SignedDigraph::SignedDigraph(std::size_t n)
    : n_(n), signs_(n * n, ArcSign::absent), succ_(n), pred_(n) {}

void SignedDigraph::set_arc(Automaton from, Automaton to, ArcSign sign) {
  if (from >= n_ || to >= n_) {
    throw Error(ErrorCode::index_out_of_range, "arc endpoint out of range");
  }
  signs_[from * n_ + to] = sign;
  if (sign == ArcSign::absent) {
    succ_[from].erase(to);
    pred_[to].erase(from);
  } else {
    succ_[from].insert(to);
    pred_[to].insert(from);
  }
}

std::vector<SignedArc> SignedDigraph::arcs() const {
  std::vector<SignedArc> out;
  for (Automaton u = 0; u < n_; ++u) {
    for (Automaton v : succ_[u].members()) out.push_back({u, v, sign(u, v)});
  }
  return out;
}

std::size_t SignedDigraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& s : succ_) c += s.size();
  return c;
}

SignedDigraph interaction_graph(const Ban& ban) {
  SignedDigraph g(ban.size());
  for (Automaton i = 0; i < ban.size(); ++i) {
    for (Automaton j : ban.in_neighbours(i).members()) {
      g.set_arc(j, i, ban.arc_sign(j, i));
    }
  }
  return g;
}

std::string_view to_string(PathSign s) {
  switch (s) {
    case PathSign::none: return "0";
    case PathSign::positive: return "+";
    case PathSign::negative: return "-";
    case PathSign::contradictory: return "contradictory";
  }
  return "?";
}

namespace {

// reach[k] bit 0: (k, +) reachable, bit 1: (k, -) reachable, by a walk of
// length >= 1 from (j, +).
std::vector<std::uint8_t> signed_reach(const SignedDigraph& g, Automaton j) {
  const std::size_t n = g.size();
  std::vector<std::uint8_t> reach(n, 0);
  std::deque<std::pair<Automaton, std::uint8_t>> queue;
  auto push = [&](Automaton k, std::uint8_t parity) {
    const std::uint8_t bit = parity == 0 ? 1 : 2;
    if (reach[k] & bit) return;
    reach[k] |= bit;
    queue.emplace_back(k, parity);
  };
  auto expand = [&](Automaton u, std::uint8_t parity) {
    for (Automaton v : g.successors(u).members()) {
      const ArcSign s = g.sign(u, v);
      if (s == ArcSign::both) {
        throw Error(ErrorCode::non_monotone_graph,
                    "arc (" + std::to_string(u + 1) + "," +
                        std::to_string(v + 1) + ") has both signs");
      }
      push(v, static_cast<std::uint8_t>(parity ^ (s == ArcSign::negative)));
    }
  };
  expand(j, 0);
  while (!queue.empty()) {
    const auto [u, parity] = queue.front();
    queue.pop_front();
    expand(u, parity);
  }
  return reach;
}

PathSign from_reach(std::uint8_t r) {
  switch (r) {
    case 1: return PathSign::positive;
    case 2: return PathSign::negative;
    case 3: return PathSign::contradictory;
    default: return PathSign::none;
  }
}

}  // namespace

PathSign path_sign_star(const SignedDigraph& g, Automaton j, Automaton i) {
  if (i >= g.size() || j >= g.size()) {
    throw Error(ErrorCode::index_out_of_range, "node out of range");
  }
  return from_reach(signed_reach(g, j)[i]);
}

std::vector<std::vector<PathSign>> path_sign_matrix(const SignedDigraph& g) {
  std::vector<std::vector<PathSign>> m(g.size());
  for (Automaton j = 0; j < g.size(); ++j) {
    const auto reach = signed_reach(g, j);
    m[j].resize(g.size());
    for (Automaton i = 0; i < g.size(); ++i) m[j][i] = from_reach(reach[i]);
  }
  return m;
}

bool has_walk(const SignedDigraph& g, Automaton j, Automaton i,
              std::size_t length, int sign) {
  const std::size_t n = g.size();
  // layer[k]: bit 0 = reachable with +, bit 1 = reachable with -.
  std::vector<std::uint8_t> layer(n, 0);
  layer[j] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<std::uint8_t> next(n, 0);
    for (Automaton u = 0; u < n; ++u) {
      if (layer[u] == 0) continue;
      for (Automaton v : g.successors(u).members()) {
        const ArcSign s = g.sign(u, v);
        if (s == ArcSign::both) {
          next[v] |= 3;
        } else if (s == ArcSign::negative) {
          next[v] |= static_cast<std::uint8_t>(((layer[u] & 1) << 1) |
                                               ((layer[u] & 2) >> 1));
        } else {
          next[v] |= layer[u];
        }
      }
    }
    layer = std::move(next);
  }
  if (sign > 0) return layer[i] & 1;
  if (sign < 0) return layer[i] & 2;
  return layer[i] != 0;
}

std::vector<std::vector<Automaton>> strongly_connected_components(
    const SignedDigraph& g) {
  const auto scc = detail::tarjan(
      g.size(), [&](std::uint32_t u) { return g.successors(u).mask(); },
      [](std::uint32_t, int k) { return static_cast<std::uint32_t>(k); });
  std::vector<std::vector<Automaton>> comps(scc.count);
  for (Automaton u = 0; u < g.size(); ++u) comps[scc.component[u]].push_back(u);
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool is_strongly_connected(const SignedDigraph& g) {
  return strongly_connected_components(g).size() == 1;
}

bool acyclic_except_loops(const SignedDigraph& g) {
  for (const auto& comp : strongly_connected_components(g)) {
    if (comp.size() > 1) return false;
  }
  return true;
}

Classification classify(const Ban& ban) {
  Classification c;
  const MonotonicityResult mono = is_monotone(ban);
  if (!mono.monotone) {
    const auto& w = *mono.witness;
    c.witness = "arc (" + std::to_string(w.j + 1) + "," +
                std::to_string(w.i + 1) + ") is non-monotone: local sign +1 at " +
                w.x.to_string() + ", -1 at " + w.y.to_string();
    return c;
  }
  c.monotone = true;
  const SignedDigraph g = interaction_graph(ban);
  const auto m = path_sign_matrix(g);
  for (Automaton j = 0; j < ban.size(); ++j) {
    for (Automaton i = 0; i < ban.size(); ++i) {
      if (m[j][i] == PathSign::contradictory) {
        c.witness = "contradictory paths from " + std::to_string(j + 1) +
                    " to " + std::to_string(i + 1);
        return c;
      }
    }
  }
  c.nice = true;
  for (const SignedArc& a : g.arcs()) {
    if (a.sign == ArcSign::negative) {
      c.witness = "arc (" + std::to_string(a.from + 1) + "," +
                  std::to_string(a.to + 1) + ") is negative";
      return c;
    }
  }
  c.totally_positive = true;
  return c;
}

Reformulation reformulate_totally_positive(const Ban& ban) {
  const Classification c = classify(ban);
  if (!c.nice) throw Error(ErrorCode::not_nice, "network is not nice: " + c.witness);
  const SignedDigraph g = interaction_graph(ban);
  if (!is_strongly_connected(g)) {
    throw Error(ErrorCode::not_strongly_connected,
                "interaction graph is not strongly connected");
  }
  AutomatonSet flipped;
  const Automaton base = 0;
  for (Automaton i = 0; i < ban.size(); ++i) {
    if (path_sign_star(g, base, i) == PathSign::negative) flipped.insert(i);
  }
  return {flip_transform(ban, flipped), flipped};
}

DepthMap depths(const SignedDigraph& g, AutomatonSet grounds) {
  const std::size_t n = g.size();
  AutomatonSet reached = grounds;
  std::vector<Automaton> frontier = grounds.members();
  while (!frontier.empty()) {
    const Automaton u = frontier.back();
    frontier.pop_back();
    for (Automaton v : g.successors(u).members()) {
      if (!reached.contains(v)) {
        reached.insert(v);
        frontier.push_back(v);
      }
    }
  }

  // Kahn's algorithm over the reached part, loops ignored.
  std::vector<std::size_t> indegree(n, 0);
  for (Automaton v : reached.members()) {
    indegree[v] = ((g.predecessors(v) & reached) - AutomatonSet::single(v)).size();
  }
  std::vector<Automaton> ready;
  for (Automaton v : reached.members()) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<Automaton> order;
  while (!ready.empty()) {
    const Automaton u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (Automaton v : (g.successors(u) & reached).members()) {
      if (v == u) continue;
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  if (order.size() != reached.size()) {
    throw Error(ErrorCode::cyclic_beyond_loops,
                "the graph reachable from the grounds has a cycle");
  }

  DepthMap map;
  map.grounds = grounds;
  map.depth.assign(n, std::nullopt);
  for (Automaton u : order) {
    if (grounds.contains(u)) {
      map.depth[u] = 0;
      continue;
    }
    std::size_t d = 0;
    for (Automaton p : ((g.predecessors(u) & reached) - AutomatonSet::single(u))
                           .members()) {
      d = std::max(d, *map.depth[p] + 1);
    }
    map.depth[u] = d;
  }
  return map;
}

std::vector<SignedArc> FavourSets::plus_arcs(const Ban& ban) const {
  std::vector<SignedArc> out;
  for (Automaton j = 0; j < n; ++j) {
    for (Automaton i = 0; i < n; ++i) {
      if (in_plus(j, i)) out.push_back({j, i, ban.arc_sign(j, i)});
    }
  }
  return out;
}

std::vector<SignedArc> FavourSets::minus_arcs(const Ban& ban) const {
  std::vector<SignedArc> out;
  for (Automaton j = 0; j < n; ++j) {
    for (Automaton i = 0; i < n; ++i) {
      if (in_minus(j, i)) out.push_back({j, i, ban.arc_sign(j, i)});
    }
  }
  return out;
}

FavourSets favour_sets(const Ban& ban, const Configuration& y) {
  if (y.size() != ban.size()) {
    throw Error(ErrorCode::length_mismatch, "target has the wrong length");
  }
  FavourSets f;
  f.n = ban.size();
  f.plus_in.assign(f.n, AutomatonSet{});
  f.minus_in.assign(f.n, AutomatonSet{});
  for (Automaton i = 0; i < f.n; ++i) {
    for (Automaton j : ban.in_neighbours(i).members()) {
      const ArcSign s = ban.arc_sign(j, i);
      if (s == ArcSign::both) {
        throw Error(ErrorCode::non_monotone_arc,
                    "arc (" + std::to_string(j + 1) + "," +
                        std::to_string(i + 1) + ") has both signs");
      }
      // Moves towards y: bs(y_j) and bs(y_i).
      if (sign_value(s) == bs(y[j]) * bs(y[i])) {
        f.plus_in[i].insert(j);
      } else {
        f.minus_in[i].insert(j);
      }
    }
  }
  return f;
}

SignedDigraph FavourGraph::shape() const {
  SignedDigraph g(size());
  for (Automaton u = 0; u < size(); ++u) {
    for (Automaton v : successors[u].members()) g.set_arc(u, v, ArcSign::positive);
  }
  return g;
}

FavourGraph favour_graph(const Ban& ban, const Configuration& y) {
  FavourGraph h;
  h.sets = favour_sets(ban, y);
  h.successors.assign(ban.size(), AutomatonSet{});
  for (Automaton i = 0; i < ban.size(); ++i) {
    for (Automaton j : h.sets.plus_in[i].members()) h.successors[j].insert(i);
    for (Automaton j : h.sets.minus_in[i].members()) h.successors[i].insert(j);
  }
  return h;
}

std::vector<std::vector<Automaton>> elementary_cycles(const SignedDigraph& g) {
  std::vector<std::vector<Automaton>> cycles;
  const std::size_t n = g.size();
  std::vector<Automaton> path;
  AutomatonSet on_path;
  std::function<void(Automaton, Automaton)> dfs = [&](Automaton start,
                                                      Automaton u) {
    for (Automaton v : g.successors(u).members()) {
      if (v == start) {
        cycles.push_back(path);
      } else if (v > start && !on_path.contains(v)) {
        path.push_back(v);
        on_path.insert(v);
        dfs(start, v);
        on_path.erase(v);
        path.pop_back();
      }
    }
  };
  for (Automaton s = 0; s < n; ++s) {
    path = {s};
    on_path = AutomatonSet::single(s);
    dfs(s, s);
  }
  return cycles;
}

FavourCycleReport validate_favour_cycles(const Ban& ban,
                                         const Configuration& y) {
  const FavourSets f = favour_sets(ban, y);
  const SignedDigraph g = interaction_graph(ban);
  FavourCycleReport report;
  for (const auto& cycle : elementary_cycles(g)) {
    ++report.cycles;
    std::size_t minus = 0;
    int sign = 1;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Automaton from = cycle[k];
      const Automaton to = cycle[(k + 1) % cycle.size()];
      if (f.in_minus(from, to)) ++minus;
      sign *= sign_value(g.sign(from, to));
    }
    if (minus == cycle.size() && !report.all_minus_cycle) {
      report.all_minus_cycle = cycle;
    }
    const int expected = (minus % 2 == 0) ? 1 : -1;
    if (sign != expected && !report.parity_violation) {
      report.parity_violation = cycle;
    }
  }
  return report;
}

std::string to_dot(const SignedDigraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Automaton u = 0; u < g.size(); ++u) out << "  " << u + 1 << ";\n";
  for (const SignedArc& a : g.arcs()) {
    out << "  " << a.from + 1 << " -> " << a.to + 1 << " [label=\""
        << to_string(a.sign) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const FavourGraph& h, const Ban& ban,
                   std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Automaton u = 0; u < h.size(); ++u) out << "  " << u + 1 << ";\n";
  for (const SignedArc& a : h.sets.plus_arcs(ban)) {
    out << "  " << a.from + 1 << " -> " << a.to + 1 << " [label=\""
        << to_string(a.sign) << "\"];\n";
  }
  for (const SignedArc& a : h.sets.minus_arcs(ban)) {
    out << "  " << a.to + 1 << " -> " << a.from + 1 << " [label=\""
        << to_string(a.sign) << "\", style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bankit
