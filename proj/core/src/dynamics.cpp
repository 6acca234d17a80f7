#include "bankit/dynamics.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "bankit/core.hpp"
#include "bankit/error.hpp"
#include "scc.hpp"

namespace bankit {

Configuration step(const Ban& ban, const Configuration& x, Automaton i) {
  if (i >= ban.size()) {
    throw Error(ErrorCode::index_out_of_range,
                "automaton " + std::to_string(i + 1) + " out of range");
  }
  return x.with(i, ban.eval(i, x));
}

std::vector<Configuration> Trajectory::configs() const {
  std::vector<Configuration> out{x0};
  out.reserve(moves.size() + 1);
  for (Automaton i : moves) out.push_back(out.back().flipped(i));
  return out;
}

Configuration Trajectory::destination() const {
  Configuration x = x0;
  for (Automaton i : moves) x = x.flipped(i);
  return x;
}

std::vector<Configuration> Streamline::configs(const Ban& ban) const {
  std::vector<Configuration> out{x0};
  out.reserve(updates.size() + 1);
  for (Automaton i : updates) out.push_back(step(ban, out.back(), i));
  return out;
}

std::optional<std::string> check_trajectory(const Ban& ban,
                                            const Trajectory& t) {
  if (t.x0.size() != ban.size()) return "initial configuration has the wrong length";
  Configuration x = t.x0;
  for (std::size_t s = 0; s < t.moves.size(); ++s) {
    const Automaton i = t.moves[s];
    if (i >= ban.size()) {
      return "move " + std::to_string(s) + " names automaton " +
             std::to_string(i + 1) + " outside the network";
    }
    if (ban.eval(i, x) == x[i]) {
      return "automaton " + std::to_string(i + 1) + " is stable in " +
             x.to_string() + " at step " + std::to_string(s);
    }
    x = x.flipped(i);
  }
  return std::nullopt;
}

void validate_trajectory(const Ban& ban, const Trajectory& t) {
  if (auto problem = check_trajectory(ban, t)) {
    throw Error(ErrorCode::invalid_trajectory, *problem);
  }
}

std::size_t state_space_cap() {
  if (const char* env = std::getenv("BANKIT_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 30) return v;
  }
  return 20;
}

TransitionGraph::TransitionGraph(const Ban& ban) : n_(ban.size()) {
  if (n_ > state_space_cap()) {
    throw Error(ErrorCode::too_large,
                "state space of " + std::to_string(n_) +
                    " automata exceeds the cap of " +
                    std::to_string(state_space_cap()));
  }
  const std::uint64_t count = std::uint64_t{1} << n_;
  unstable_.assign(count, 0);
  for (Automaton i = 0; i < n_; ++i) {
    const LocalFunction& f = ban.function(i);
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t x = 0; x < count; ++x) {
      if (f(x) != ((x & bit) != 0)) unstable_[x] |= bit;
    }
  }
}

std::size_t TransitionGraph::out_degree(std::uint64_t x) const {
  return static_cast<std::size_t>(std::popcount(unstable_[x]));
}

std::size_t TransitionGraph::arc_count() const {
  std::size_t c = 0;
  for (std::uint64_t u : unstable_) c += static_cast<std::size_t>(std::popcount(u));
  return c;
}

TransitionGraph transition_graph(const Ban& ban) { return TransitionGraph(ban); }

std::vector<std::uint32_t> distances_from(const TransitionGraph& g,
                                          std::uint64_t x) {
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<std::uint64_t> queue{x};
  dist[x] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t u = queue[head];
    for (std::uint64_t m = g.unstable(u); m != 0; m &= m - 1) {
      const std::uint64_t v = u ^ (m & -m);
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> distances_to(
    const TransitionGraph& g, const std::vector<std::uint64_t>& targets) {
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t t : targets) {
    if (dist[t] == kUnreachable) {
      dist[t] = 0;
      queue.push_back(t);
    }
  }
  const std::size_t n = g.automata();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t v = queue[head];
    // Predecessors of v: w = v with j flipped, where j is unstable in w.
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      const std::uint64_t w = v ^ bit;
      if ((g.unstable(w) & bit) && dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Trajectory descend(const TransitionGraph& g,
                   const std::vector<std::uint32_t>& dist_to,
                   const Configuration& x) {
  Trajectory t{x, {}};
  std::uint64_t cur = x.bits();
  if (dist_to[cur] == kUnreachable) {
    throw Error(ErrorCode::unreachable, "no trajectory from " + x.to_string());
  }
  while (dist_to[cur] != 0) {
    bool moved = false;
    for (std::uint64_t m = g.unstable(cur); m != 0; m &= m - 1) {
      const std::uint64_t bit = m & -m;
      if (dist_to[cur ^ bit] + 1 == dist_to[cur]) {
        t.moves.push_back(static_cast<Automaton>(std::countr_zero(bit)));
        cur ^= bit;
        moved = true;
        break;
      }
    }
    if (!moved) {
      throw Error(ErrorCode::invalid_trajectory, "inconsistent distance map");
    }
  }
  return t;
}

std::optional<Trajectory> shortest_trajectory(const TransitionGraph& g,
                                              const Configuration& x,
                                              const Configuration& y) {
  if (x.size() != g.automata() || y.size() != g.automata()) {
    throw Error(ErrorCode::length_mismatch, "configuration has the wrong length");
  }
  const auto dist = distances_to(g, {y.bits()});
  if (dist[x.bits()] == kUnreachable) return std::nullopt;
  return descend(g, dist, x);
}

std::optional<Trajectory> shortest_trajectory(const Ban& ban,
                                              const Configuration& x,
                                              const Configuration& y) {
  return shortest_trajectory(TransitionGraph(ban), x, y);
}

namespace {

bool has_repeated_mover(const std::vector<Automaton>& moves) {
  std::uint64_t seen = 0;
  for (Automaton i : moves) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (seen & bit) return true;
    seen |= bit;
  }
  return false;
}

}  // namespace

ReversibilityReport requires_reversibility(const Ban& ban,
                                           const Configuration& x,
                                           const Configuration& y,
                                           std::size_t cap) {
  const TransitionGraph g(ban);
  if (x.size() != ban.size() || y.size() != ban.size()) {
    throw Error(ErrorCode::length_mismatch, "configuration has the wrong length");
  }
  const auto dist = distances_to(g, {y.bits()});
  if (dist[x.bits()] == kUnreachable) {
    throw Error(ErrorCode::unreachable,
                y.to_string() + " is not reachable from " + x.to_string());
  }
  ReversibilityReport r;
  r.distance = dist[x.bits()];
  r.hamming = hd(x, y).size();
  r.shortest = descend(g, dist, x);
  r.is_long = has_repeated_mover(r.shortest.moves);
  bool all_long = true;
  const auto e = for_each_shortest(g, dist, x, cap, [&](const Trajectory& t) {
    if (!has_repeated_mover(t.moves)) {
      all_long = false;
      return false;
    }
    return true;
  });
  r.shortest_count = e.visited;
  r.truncated = e.truncated;
  r.all_shortest_long = all_long;
  return r;
}

std::string_view to_string(AttractorKind k) {
  return k == AttractorKind::stable ? "stable" : "cyclic";
}

bool Attractor::contains(std::uint64_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::optional<std::size_t> AttractorSet::attractor_of(std::uint64_t x) const {
  for (std::size_t k = 0; k < attractors.size(); ++k) {
    if (attractors[k].contains(x)) return k;
  }
  return std::nullopt;
}

std::size_t AttractorSet::stable_count() const {
  return static_cast<std::size_t>(
      std::count_if(attractors.begin(), attractors.end(), [](const Attractor& a) {
        return a.kind == AttractorKind::stable;
      }));
}

AttractorSet attractors(const TransitionGraph& g) {
  const std::size_t count = g.node_count();
  const auto scc = detail::tarjan(
      count, [&](std::uint32_t u) { return g.unstable(u); },
      [](std::uint32_t u, int k) { return u ^ (std::uint32_t{1} << k); });
  std::vector<bool> terminal(scc.count, true);
  for (std::uint64_t u = 0; u < count; ++u) {
    for (std::uint64_t m = g.unstable(u); m != 0; m &= m - 1) {
      const std::uint64_t v = u ^ (m & -m);
      if (scc.component[v] != scc.component[u]) terminal[scc.component[u]] = false;
    }
  }
  std::vector<std::int64_t> slot(scc.count, -1);
  AttractorSet set;
  set.n = g.automata();
  // Scanning in increasing bit order orders attractors by smallest member.
  for (std::uint64_t u = 0; u < count; ++u) {
    const std::uint32_t c = scc.component[u];
    if (!terminal[c]) continue;
    if (slot[c] < 0) {
      slot[c] = static_cast<std::int64_t>(set.attractors.size());
      set.attractors.emplace_back();
    }
    set.attractors[static_cast<std::size_t>(slot[c])].members.push_back(u);
  }
  for (Attractor& a : set.attractors) {
    a.kind = (a.members.size() == 1 && g.unstable(a.members.front()) == 0)
                 ? AttractorKind::stable
                 : AttractorKind::cyclic;
  }
  return set;
}

AttractorSet attractors(const Ban& ban) { return attractors(TransitionGraph(ban)); }

Trajectory shortest_to_attractor(const TransitionGraph& g,
                                 const Configuration& x, const Attractor& a) {
  if (x.size() != g.automata()) {
    throw Error(ErrorCode::length_mismatch, "configuration has the wrong length");
  }
  const auto dist = distances_to(g, a.members);
  return descend(g, dist, x);
}

Trajectory shortest_to_attractor(const Ban& ban, const Configuration& x,
                                 const Attractor& a) {
  return shortest_to_attractor(TransitionGraph(ban), x, a);
}

std::optional<Trajectory> hamiltonian_shortest(const Ban& ban) {
  const std::size_t n = ban.size();
  if (n > kHamiltonianMaxN) {
    throw Error(ErrorCode::too_large,
                "Hamiltonian search is limited to " +
                    std::to_string(kHamiltonianMaxN) + " automata");
  }
  const TransitionGraph g(ban);
  const std::uint64_t count = g.node_count();
  const std::uint32_t full = static_cast<std::uint32_t>(count - 1);
  for (std::uint64_t x = 0; x < count; ++x) {
    const auto from = distances_from(g, x);
    for (std::uint64_t y = 0; y < count; ++y) {
      if (from[y] != full) continue;
      const auto to = distances_to(g, {y});
      Trajectory t = descend(g, to, Configuration(n, x));
      // A shortest trajectory never revisits a configuration, so 2^n - 1
      // moves visit every configuration; check it anyway.
      auto configs = t.configs();
      std::vector<std::uint64_t> bits;
      for (const auto& c : configs) bits.push_back(c.bits());
      std::sort(bits.begin(), bits.end());
      if (std::unique(bits.begin(), bits.end()) == bits.end() &&
          bits.size() == count) {
        return t;
      }
    }
  }
  return std::nullopt;
}

std::string to_dot(const TransitionGraph& g, std::string_view name) {
  std::ostringstream out;
  const std::size_t n = g.automata();
  out << "digraph " << name << " {\n";
  for (std::uint64_t u = 0; u < g.node_count(); ++u) {
    out << "  \"" << Configuration(n, u).to_string() << "\"";
    if (g.unstable(u) == 0) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (std::uint64_t u = 0; u < g.node_count(); ++u) {
    for (std::uint64_t m = g.unstable(u); m != 0; m &= m - 1) {
      const std::uint64_t bit = m & -m;
      out << "  \"" << Configuration(n, u).to_string() << "\" -> \""
          << Configuration(n, u ^ bit).to_string() << "\" [label=\""
          << std::countr_zero(bit) + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bankit
