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

enum class ScheduleStatus {
  ok,
  /// The input does not meet the scheduler's hypothesis; see reasons.
  hypothesis_violated,
  /// The hypothesis holds but the construction broke down; see finding.
  finding,
};

[[nodiscard]] std::string_view to_string(ScheduleStatus s);

struct RetargetEvent {
  std::size_t step = 0;  // position in the update order
  Configuration from;
  Configuration to;
};

struct ScheduleReport {
  std::string scheduler;
  ScheduleStatus status = ScheduleStatus::ok;
  bool hypothesis_ok = true;
  std::vector<std::string> reasons;
  std::optional<Trajectory> trajectory;
  /// Claimed maximal length.
  std::size_t bound = 0;
  std::size_t achieved = 0;
  /// Target changes made while heading for an attractor.
  std::vector<RetargetEvent> retarget_log;
  /// Configuration the schedule was heading for when it stopped.
  std::optional<Configuration> target;
  /// BFS distance to the target (or attractor), when it was computed.
  std::optional<std::size_t> bfs_distance;
  std::string finding;
  /// Stable configurations with no disfavourable arc, reported by the
  /// all-positive scheduler in attractor mode.
  std::vector<Configuration> stable_configurations;
};

/// Update order for the acyclic favour-graph schedulers: automata sorted by
/// (depth, id), depths taken in H^T from the grounds made of the source
/// automata and of the automata without in-arcs in H^T. Throws
/// cyclic_beyond_loops when H^T has a cycle other than a loop.
[[nodiscard]] std::vector<Automaton> favour_order(const Ban& ban,
                                                  const FavourGraph& h);

/// Every automaton either favours all its out-neighbours or disfavours all
/// of them. Moves towards y, favouring automata first. Bound n.
[[nodiscard]] ScheduleReport schedule_uniform_favour(const Ban& ban,
                                                     const Configuration& x,
                                                     const Configuration& y);

/// No disfavourable arc for y. Only moves towards y. Bound n. In attractor
/// mode the stable configurations of the network are recorded, and a
/// strongly connected G with more than two of them (or a cyclic attractor)
/// is a finding.
[[nodiscard]] ScheduleReport schedule_all_positive(const Ban& ban,
                                                   const Configuration& x,
                                                   const Configuration& y,
                                                   bool attractor_mode = false);

/// H^T acyclic except for loops and every non-source automaton starts away
/// from its target state. Moves in favour order, checking before each move
/// that the in-neighbours are in their most favourable states. Bound n minus
/// the number of source automata.
[[nodiscard]] ScheduleReport schedule_acyclic_favour(const Ban& ban,
                                                     const Configuration& x,
                                                     const Configuration& y);

/// H^T acyclic except for loops and y stable. Same order. Bound n minus the
/// number of source automata.
[[nodiscard]] ScheduleReport schedule_to_stable(const Ban& ban,
                                                const Configuration& x,
                                                const Configuration& y);

/// H^T (for the member of a nearest to x) acyclic except for loops. One pass
/// in favour order, moving, skipping or retargeting within the attractor.
/// Bound n.
[[nodiscard]] ScheduleReport schedule_to_attractor(const Ban& ban,
                                                   const Configuration& x,
                                                   const Attractor& a);

/// Nice network, y stable, and every cycle of H^T lies in a strongly
/// connected component built from favourable arcs only. Components are
/// handled in order, each one greedily. Bound n.
[[nodiscard]] ScheduleReport schedule_nice_scc(const Ban& ban,
                                               const Configuration& x,
                                               const Configuration& y);

/// Most favourable conditions for i with respect to y: every favourable
/// in-neighbour j in state y_j and every disfavourable one in state not y_j.
struct FavourableConditions {
  /// False when f_i is constant (no in-neighbours).
  bool applicable = false;
  /// f_i(z) = y_i in every such z.
  bool reaches_target = false;
  /// i is unstable in such a z while still in state not y_i.
  bool unstable_before_move = false;
  /// A configuration z where the corresponding property fails.
  std::optional<Configuration> counterexample;
};

[[nodiscard]] FavourableConditions favourable_conditions(const Ban& ban,
                                                        const Configuration& y,
                                                        Automaton i);
/// reaches_target of favourable_conditions, true for constant f_i.
[[nodiscard]] bool favourable_conditions_hold(const Ban& ban,
                                              const Configuration& y, Automaton i);

enum class Shape { path, positive_cycle, negative_cycle, acyclic };

[[nodiscard]] std::string_view to_string(Shape s);

/// Recognised shapes of G: a single directed path (its head may carry a
/// positive loop), a single cycle through every automaton, or acyclic except
/// for source loops.
[[nodiscard]] std::optional<Shape> detect_shape(const Ban& ban);

inline constexpr std::size_t kBoundsMaxN = 12;

struct BoundsReport {
  Shape shape = Shape::path;
  std::size_t n = 0;
  /// Longest shortest trajectory between two configurations.
  std::size_t max_pair_distance = 0;
  /// Longest shortest trajectory from a configuration to a reachable
  /// attractor.
  std::size_t max_attractor_distance = 0;
  /// Longest shortest trajectory from a configuration to a recurrent one.
  std::size_t max_recurrent_distance = 0;
  std::size_t stable_attractors = 0;
  std::size_t cyclic_attractors = 0;
  CheckReport checks;
};

/// Exhaustive distance and attractor census for the recognised shapes.
/// Throws shape_not_recognized or too_large.
[[nodiscard]] BoundsReport bounds_suite(const Ban& ban);

}  // namespace bankit
