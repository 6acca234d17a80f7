#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bankit/ban.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/graph.hpp"
#include "bankit/report.hpp"

namespace bankit {

enum class StepKind {
  /// The move was possible since time 0 and i never moved before.
  root,
  /// tau(t) is the last time i was stable before t.
  caused,
  /// i moved while never stable since its previous move (negative loop).
  undefined,
};

[[nodiscard]] std::string_view to_string(StepKind k);

/// tau-causality over one trajectory. Time steps are the move indices
/// 0..T-1.
struct TauForest {
  std::vector<StepKind> kind;
  std::vector<std::optional<std::size_t>> tau;
  /// Root steps in increasing order.
  std::vector<std::size_t> roots;
  /// Steps flagged as UndefinedCause.
  std::vector<std::size_t> undefined;
  /// Connected component of the anti-graph for every step.
  std::vector<std::size_t> tree;
  std::size_t tree_count = 0;

  [[nodiscard]] std::size_t size() const { return kind.size(); }
  /// t, tau(t), tau^2(t), ... down to the first step of its chain.
  [[nodiscard]] std::vector<std::size_t> chain(std::size_t t) const;
  /// The branch ending at t, oldest step first.
  [[nodiscard]] std::vector<std::size_t> branch(std::size_t t) const;
  /// Whether the undirected anti-graph has no cycle.
  [[nodiscard]] bool strongly_acyclic() const;
};

/// Throws invalid_trajectory when traj is not a trajectory of ban.
[[nodiscard]] TauForest tau_forest(const Ban& ban, const Trajectory& traj);

/// G_tau: an arc (nu(tau(t)), nu(t)) for every caused step, labelled with the
/// sign of the corresponding arc of G.
[[nodiscard]] SignedDigraph g_tau(const Ban& ban, const Trajectory& traj);
[[nodiscard]] SignedDigraph g_tau(const Ban& ban, const Trajectory& traj,
                                  const TauForest& forest);

/// kappa(t1): steps t < t1 whose mover j does not move again before t1 and
/// whose undoing would stabilise nu(t1) in x(t1).
[[nodiscard]] std::vector<std::size_t> kappa(const Ban& ban,
                                             const Trajectory& traj,
                                             std::size_t t1);

/// {tau(t)} (when defined) together with kappa(t), sorted.
[[nodiscard]] std::vector<std::size_t> cause_union(const Ban& ban,
                                                   const Trajectory& traj,
                                                   std::size_t t);

/// Per-property checks of the causality results on one trajectory:
/// "tau_sign" sign of every tau pair, "branch_walk" walks along branches,
/// "branch_reversal" and "tree_reversal" up-and-down moves on a branch or
/// tree force non-niceness, "repeated_move" repeated moves on a branch of a
/// nice network, plus the structural "anti_graph", "root_bound" and
/// "g_tau_subgraph" checks.
[[nodiscard]] CheckReport verify_causality(const Ban& ban, const Trajectory& traj);

/// DOT text of the anti-graph of tau; nodes are labelled "t:nu(t)" (1-based
/// automaton).
[[nodiscard]] std::string anti_graph_dot(const TauForest& forest,
                                         const Trajectory& traj);

}  // namespace bankit
