#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bankit/ban.hpp"
#include "bankit/configuration.hpp"

namespace bankit {

struct SignedArc {
  Automaton from = 0;
  Automaton to = 0;
  ArcSign sign = ArcSign::absent;

  friend bool operator==(const SignedArc&, const SignedArc&) = default;
};

/// Directed graph over automata with at most one signed arc per ordered pair.
class SignedDigraph {
 public:
  SignedDigraph() = default;
  explicit SignedDigraph(std::size_t n);

  [[nodiscard]] std::size_t size() const { return n_; }

  /// Adds or relabels (from, to). ArcSign::absent removes the arc.
  void set_arc(Automaton from, Automaton to, ArcSign sign);

  [[nodiscard]] ArcSign sign(Automaton from, Automaton to) const {
    return signs_[from * n_ + to];
  }
  [[nodiscard]] bool has_arc(Automaton from, Automaton to) const {
    return sign(from, to) != ArcSign::absent;
  }
  [[nodiscard]] AutomatonSet successors(Automaton from) const {
    return succ_[from];
  }
  [[nodiscard]] AutomatonSet predecessors(Automaton to) const {
    return pred_[to];
  }

  /// All arcs ordered by (from, to).
  [[nodiscard]] std::vector<SignedArc> arcs() const;
  [[nodiscard]] std::size_t arc_count() const;

  friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ArcSign> signs_;
  std::vector<AutomatonSet> succ_;
  std::vector<AutomatonSet> pred_;
};

/// The interaction graph G: an arc (j, i) for every semantic influence.
[[nodiscard]] SignedDigraph interaction_graph(const Ban& ban);

/// sign*(j, i) over paths of length >= 1.
enum class PathSign { none, positive, negative, contradictory };

[[nodiscard]] std::string_view to_string(PathSign s);

/// Computed by reachability over (node, sign) pairs from (j, +).
/// Throws non_monotone_graph if G has an arc labelled `both`.
[[nodiscard]] PathSign path_sign_star(const SignedDigraph& g, Automaton j,
                                      Automaton i);

/// sign*(j, i) for every ordered pair; result[j][i].
[[nodiscard]] std::vector<std::vector<PathSign>> path_sign_matrix(
    const SignedDigraph& g);

/// Whether some walk of exactly `length` arcs leads from j to i with the
/// given sign (+1 / -1); sign 0 ignores signs.
[[nodiscard]] bool has_walk(const SignedDigraph& g, Automaton j, Automaton i,
                            std::size_t length, int sign);

/// Strongly connected components, each sorted, ordered by smallest member.
[[nodiscard]] std::vector<std::vector<Automaton>> strongly_connected_components(
    const SignedDigraph& g);

[[nodiscard]] bool is_strongly_connected(const SignedDigraph& g);

/// Whether the graph without its loops has no directed cycle.
[[nodiscard]] bool acyclic_except_loops(const SignedDigraph& g);

struct Classification {
  bool monotone = false;
  bool nice = false;
  bool totally_positive = false;
  /// Explains the first property that fails; empty when all hold.
  std::string witness;
};

[[nodiscard]] Classification classify(const Ban& ban);

struct Reformulation {
  Ban ban;
  AutomatonSet flipped;
};

/// Flips every automaton i with sign*(r, i) = -1 where r is automaton 1; the
/// result is totally positive for nice strongly connected inputs.
[[nodiscard]] Reformulation reformulate_totally_positive(const Ban& ban);

struct DepthMap {
  AutomatonSet grounds;
  /// Longest loop-free path length from the grounds; empty if unreachable.
  std::vector<std::optional<std::size_t>> depth;
};

/// Depths from the grounds, ignoring loops. Grounds have depth 0.
/// Throws cyclic_beyond_loops if the part reachable from the grounds has a
/// cycle other than a loop.
[[nodiscard]] DepthMap depths(const SignedDigraph& g, AutomatonSet grounds);

/// Arcs of G split by whether the source's move towards y favours the sink's
/// move towards y (A_+) or not (A_-).
struct FavourSets {
  std::size_t n = 0;
  /// plus_in[i] = { j : (j, i) in A_+ }, likewise minus_in.
  std::vector<AutomatonSet> plus_in;
  std::vector<AutomatonSet> minus_in;

  [[nodiscard]] bool in_plus(Automaton j, Automaton i) const {
    return plus_in[i].contains(j);
  }
  [[nodiscard]] bool in_minus(Automaton j, Automaton i) const {
    return minus_in[i].contains(j);
  }
  [[nodiscard]] std::vector<SignedArc> plus_arcs(const Ban& ban) const;
  [[nodiscard]] std::vector<SignedArc> minus_arcs(const Ban& ban) const;
};

/// Throws non_monotone_arc if G has an arc labelled `both`.
[[nodiscard]] FavourSets favour_sets(const Ban& ban, const Configuration& y);

/// H^T: A_+ arcs as they are, A_- arcs reversed.
struct FavourGraph {
  FavourSets sets;
  /// successors[u] in H.
  std::vector<AutomatonSet> successors;

  [[nodiscard]] std::size_t size() const { return successors.size(); }
  [[nodiscard]] bool has_arc(Automaton from, Automaton to) const {
    return successors[from].contains(to);
  }
  [[nodiscard]] SignedDigraph shape() const;
};

[[nodiscard]] FavourGraph favour_graph(const Ban& ban, const Configuration& y);

/// Checks on the cycles of G against the favour sets for target y.
struct FavourCycleReport {
  std::size_t cycles = 0;
  /// A cycle made only of A_- arcs, if one exists.
  std::optional<std::vector<Automaton>> all_minus_cycle;
  /// A cycle whose sign differs from (-1)^(number of A_- arcs), if any.
  std::optional<std::vector<Automaton>> parity_violation;
};

/// Enumerates the elementary cycles of G (loops included). Intended for
/// small networks.
[[nodiscard]] FavourCycleReport validate_favour_cycles(const Ban& ban,
                                                       const Configuration& y);

/// Elementary cycles of g, each starting at its smallest node.
[[nodiscard]] std::vector<std::vector<Automaton>> elementary_cycles(
    const SignedDigraph& g);

/// DOT text with "+"/"-" labels.
[[nodiscard]] std::string to_dot(const SignedDigraph& g, std::string_view name);

/// DOT text of H^T; reversed A_- arcs are dashed.
[[nodiscard]] std::string to_dot(const FavourGraph& h, const Ban& ban,
                                 std::string_view name);

}  // namespace bankit
