#pragma once

#include <optional>
#include <vector>

#include "bankit/ban.hpp"
#include "bankit/configuration.hpp"

namespace bankit {

/// U(x) = { i : f_i(x) != x_i }.
[[nodiscard]] AutomatonSet unstable_set(const Ban& ban, const Configuration& x);

/// S(x), the complement of U(x).
[[nodiscard]] AutomatonSet stable_set(const Ban& ban, const Configuration& x);

/// Punctual sign of the influence of j on i in x:
/// (f_i(x with j flipped) - f_i(x)) * nabla(x, j), in {-1, 0, +1}.
/// Covers j == i (self-influence).
[[nodiscard]] int local_sign(const Ban& ban, const Configuration& x,
                             Automaton j, Automaton i);

[[nodiscard]] inline ArcSign arc_sign(const Ban& ban, Automaton j,
                                      Automaton i) {
  return ban.arc_sign(j, i);
}

/// Two configurations where j influences i with opposite signs.
struct MonotonicityWitness {
  Configuration x;  // local_sign(x, j, i) == +1
  Configuration y;  // local_sign(y, j, i) == -1
  Automaton j = 0;
  Automaton i = 0;
};

struct MonotonicityResult {
  bool monotone = true;
  std::optional<MonotonicityWitness> witness;
};

[[nodiscard]] MonotonicityResult is_monotone(const Ban& ban);

/// x_{j->i} = SB(sign(j, i) * BS(x_j)); x_j itself when j is not an
/// in-neighbour of i. Throws non_monotone_arc if the arc sign is `both`.
[[nodiscard]] bool neighbour_input(const Ban& ban, const Configuration& x,
                                   Automaton j, Automaton i);

/// The straightened inputs of i: bit j holds x_{j->i}.
[[nodiscard]] Configuration straight_inputs(const Ban& ban,
                                            const Configuration& x,
                                            Automaton i);

/// g_i with g_i(straight_inputs(x, i)) == f_i(x). Its expression is f_i with
/// every negative in-neighbour replaced by its negation, which makes it
/// non-decreasing in every input.
[[nodiscard]] LocalFunction straight_function(const Ban& ban, Automaton i);

/// Exchanges the names of the two states of every automaton in `flipped`:
/// f'_j(x) = f_j(x xor F) xor [j in F].
[[nodiscard]] Ban flip_transform(const Ban& ban, AutomatonSet flipped);

/// Result of replacing every constant automaton i by a positive source loop
/// i_1 (which keeps id i) and a follower i_2 (appended) with f_{i_2} = x_{i_1}.
struct SourceElimination {
  Ban ban;
  /// For every automaton of the input network, the automaton of `ban` that
  /// mirrors its state (i_2 for constant automata, itself otherwise).
  std::vector<Automaton> mirror;
  /// Constant automata of the input with their constant value.
  std::vector<std::pair<Automaton, bool>> constants;

  /// Initial configuration of `ban` matching x of the input network.
  [[nodiscard]] Configuration rewrite_initial(const Configuration& x) const;
  /// Inverse view: the input-network configuration mirrored by x'.
  [[nodiscard]] Configuration project(const Configuration& x_new) const;
};

[[nodiscard]] SourceElimination eliminate_real_sources(const Ban& ban);

/// Automata whose only in-neighbour is a positive loop over themselves.
/// Throws constant_function_present if some local function is constant.
[[nodiscard]] AutomatonSet source_automata(const Ban& ban);

}  // namespace bankit
