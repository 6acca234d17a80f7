#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bankit/ban.hpp"
#include "bankit/configuration.hpp"

namespace bankit {

/// One asynchronous update: i takes the value f_i(x). Identity when i is
/// stable in x.
[[nodiscard]] Configuration step(const Ban& ban, const Configuration& x,
                                 Automaton i);

/// Initial configuration plus the automata that move, in order. Every move
/// must be effective.
struct Trajectory {
  Configuration x0;
  std::vector<Automaton> moves;

  [[nodiscard]] std::size_t length() const { return moves.size(); }
  /// x(0), ..., x(T).
  [[nodiscard]] std::vector<Configuration> configs() const;
  [[nodiscard]] Configuration destination() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Initial configuration plus updated automata; updates may be ineffective.
struct Streamline {
  Configuration x0;
  std::vector<Automaton> updates;

  [[nodiscard]] std::size_t length() const { return updates.size(); }
  [[nodiscard]] std::vector<Configuration> configs(const Ban& ban) const;

  [[nodiscard]] static Streamline of(const Trajectory& t) {
    return {t.x0, t.moves};
  }
};

/// Empty when the trajectory is valid, otherwise what is wrong with it.
[[nodiscard]] std::optional<std::string> check_trajectory(const Ban& ban,
                                                          const Trajectory& t);

/// Throws invalid_trajectory if check_trajectory reports a problem.
void validate_trajectory(const Ban& ban, const Trajectory& t);

/// Largest n for which the 2^n state space is materialised. 20 unless the
/// BANKIT_MAX_N environment variable says otherwise.
[[nodiscard]] std::size_t state_space_cap();

/// The asynchronous transition graph: node x (indexed by its bits) has an arc
/// to x with i flipped for every i in U(x).
class TransitionGraph {
 public:
  /// Throws too_large if n exceeds state_space_cap().
  explicit TransitionGraph(const Ban& ban);

  [[nodiscard]] std::size_t automata() const { return n_; }
  [[nodiscard]] std::size_t node_count() const { return unstable_.size(); }
  /// U(x) as a mask.
  [[nodiscard]] std::uint64_t unstable(std::uint64_t x) const {
    return unstable_[x];
  }
  [[nodiscard]] std::size_t out_degree(std::uint64_t x) const;
  [[nodiscard]] std::size_t arc_count() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> unstable_;
};

[[nodiscard]] TransitionGraph transition_graph(const Ban& ban);

inline constexpr std::uint32_t kUnreachable = 0xFFFFFFFFU;

/// BFS distances from x to every configuration.
[[nodiscard]] std::vector<std::uint32_t> distances_from(
    const TransitionGraph& g, std::uint64_t x);

/// BFS distances from every configuration to the nearest target.
[[nodiscard]] std::vector<std::uint32_t> distances_to(
    const TransitionGraph& g, const std::vector<std::uint64_t>& targets);

/// Follows a distance map down to 0, always taking the smallest automaton
/// that decreases the distance. This yields the lexicographically smallest
/// move sequence among all shortest ones.
[[nodiscard]] Trajectory descend(const TransitionGraph& g,
                                 const std::vector<std::uint32_t>& dist_to,
                                 const Configuration& x);

/// Lexicographically smallest shortest trajectory from x to y, if any.
[[nodiscard]] std::optional<Trajectory> shortest_trajectory(
    const Ban& ban, const Configuration& x, const Configuration& y);
[[nodiscard]] std::optional<Trajectory> shortest_trajectory(
    const TransitionGraph& g, const Configuration& x, const Configuration& y);

struct ReversibilityReport {
  std::size_t distance = 0;
  std::size_t hamming = 0;
  /// Some automaton moves at least twice on the returned shortest trajectory.
  bool is_long = false;
  /// Every shortest trajectory is long.
  bool all_shortest_long = false;
  /// Number of shortest trajectories enumerated.
  std::size_t shortest_count = 0;
  /// The enumeration hit its cap; all_shortest_long covers the enumerated ones.
  bool truncated = false;
  Trajectory shortest;
};

inline constexpr std::size_t kShortestEnumerationCap = 1'000'000;

/// Throws unreachable if y cannot be reached from x.
[[nodiscard]] ReversibilityReport requires_reversibility(
    const Ban& ban, const Configuration& x, const Configuration& y,
    std::size_t cap = kShortestEnumerationCap);

/// Calls visit on every shortest trajectory from x to the targets encoded by
/// dist_to, in lexicographic order, until visit returns false or the cap is
/// reached. Returns the number visited and whether the cap stopped it.
struct EnumerationResult {
  std::size_t visited = 0;
  bool truncated = false;
};

template <class Visit>
EnumerationResult for_each_shortest(const TransitionGraph& g,
                                    const std::vector<std::uint32_t>& dist_to,
                                    const Configuration& x, std::size_t cap,
                                    Visit&& visit);

enum class AttractorKind { stable, cyclic };

[[nodiscard]] std::string_view to_string(AttractorKind k);

struct Attractor {
  /// Members in increasing bit order.
  std::vector<std::uint64_t> members;
  AttractorKind kind = AttractorKind::stable;

  [[nodiscard]] bool contains(std::uint64_t x) const;
  [[nodiscard]] std::size_t size() const { return members.size(); }
};

struct AttractorSet {
  std::size_t n = 0;
  /// Ordered by smallest member.
  std::vector<Attractor> attractors;

  /// Index of the attractor containing x, if x is recurrent.
  [[nodiscard]] std::optional<std::size_t> attractor_of(std::uint64_t x) const;
  [[nodiscard]] bool recurrent(std::uint64_t x) const {
    return attractor_of(x).has_value();
  }
  [[nodiscard]] std::size_t stable_count() const;
};

/// Terminal strongly connected components of the transition graph.
[[nodiscard]] AttractorSet attractors(const Ban& ban);
[[nodiscard]] AttractorSet attractors(const TransitionGraph& g);

/// Shortest trajectory from x to the nearest member of a. Throws unreachable
/// if a is not reachable (which cannot happen for an actual attractor).
[[nodiscard]] Trajectory shortest_to_attractor(const Ban& ban,
                                               const Configuration& x,
                                               const Attractor& a);
[[nodiscard]] Trajectory shortest_to_attractor(const TransitionGraph& g,
                                               const Configuration& x,
                                               const Attractor& a);

inline constexpr std::size_t kHamiltonianMaxN = 4;

/// A shortest trajectory through all 2^n configurations (2^n - 1 moves), if
/// the network has one. Throws too_large for n > 4.
[[nodiscard]] std::optional<Trajectory> hamiltonian_shortest(const Ban& ban);

/// DOT text of the transition graph, arcs labelled with the moving automaton.
[[nodiscard]] std::string to_dot(const TransitionGraph& g,
                                 std::string_view name);

// ---------------------------------------------------------------------------

template <class Visit>
EnumerationResult for_each_shortest(const TransitionGraph& g,
                                    const std::vector<std::uint32_t>& dist_to,
                                    const Configuration& x, std::size_t cap,
                                    Visit&& visit) {
  EnumerationResult result;
  if (dist_to[x.bits()] == kUnreachable) return result;
  Trajectory current{x, {}};
  bool stop = false;
  // Explicit stack of (configuration, remaining candidate moves).
  struct Frame {
    std::uint64_t node;
    std::uint64_t candidates;
  };
  auto candidates_of = [&](std::uint64_t node) {
    std::uint64_t c = 0;
    const std::uint32_t d = dist_to[node];
    for (std::uint64_t u = g.unstable(node); u != 0; u &= u - 1) {
      const auto i = static_cast<unsigned>(std::countr_zero(u));
      const std::uint64_t next = node ^ (std::uint64_t{1} << i);
      if (dist_to[next] + 1 == d) c |= std::uint64_t{1} << i;
    }
    return c;
  };
  std::vector<Frame> frames{{x.bits(), candidates_of(x.bits())}};
  if (dist_to[x.bits()] == 0) {
    ++result.visited;
    visit(static_cast<const Trajectory&>(current));
    return result;
  }
  while (!frames.empty() && !stop) {
    Frame& f = frames.back();
    if (f.candidates == 0) {
      frames.pop_back();
      if (!current.moves.empty()) current.moves.pop_back();
      continue;
    }
    const auto i = static_cast<Automaton>(std::countr_zero(f.candidates));
    f.candidates &= f.candidates - 1;
    const std::uint64_t next = f.node ^ (std::uint64_t{1} << i);
    current.moves.push_back(i);
    if (dist_to[next] == 0) {
      ++result.visited;
      if (!visit(static_cast<const Trajectory&>(current))) stop = true;
      current.moves.pop_back();
      if (!stop && result.visited >= cap) {
        result.truncated = true;
        stop = true;
      }
      continue;
    }
    frames.push_back({next, candidates_of(next)});
  }
  return result;
}

}  // namespace bankit
