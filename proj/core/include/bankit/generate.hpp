#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bankit/ban.hpp"
#include "bankit/dynamics.hpp"

namespace bankit {

// Generators draw from a fixed engine and only use its raw output, so a seed
// produces the same instances with every standard library.
using Rng = std::mt19937_64;

/// Uniform-ish integer in [0, bound).
[[nodiscard]] std::uint64_t below(Rng& rng, std::uint64_t bound);

/// Positive monotone truth tables over k inputs that depend on all of them.
/// k <= 4.
[[nodiscard]] const std::vector<TruthTable>& full_support_monotone_tables(std::size_t k);

/// Expression of a positive monotone table with input m negated when
/// negative[m]: a disjunction of its minimal true points.
[[nodiscard]] BoolExpr monotone_expr(const TruthTable& table,
                                     const std::vector<Automaton>& inputs,
                                     const std::vector<bool>& negative);

struct MonotoneOptions {
  std::size_t max_in_degree = 3;
  /// Probability that a given arc is considered.
  double arc_probability = 0.4;
  bool allow_loops = true;
  /// Without in-neighbours an automaton becomes constant instead of a
  /// positive source loop.
  bool allow_constants = false;
};

[[nodiscard]] Ban random_monotone_ban(std::size_t n, Rng& rng, MonotoneOptions opts = {});

/// Arbitrary local functions (possibly non-monotone or constant).
[[nodiscard]] Ban random_ban(std::size_t n, Rng& rng, std::size_t max_in_degree = 3);

/// Every arc (j, i) gets the sign s_j * s_i for a random s, which rules out
/// contradictory paths. With strongly_connected a random Hamiltonian cycle is
/// laid down first.
[[nodiscard]] Ban random_nice_ban(std::size_t n, Rng& rng, bool strongly_connected = false,
                                  std::size_t max_in_degree = 3);

/// Acyclic except for positive loops on the automata without other inputs.
[[nodiscard]] Ban random_acyclic_ban(std::size_t n, Rng& rng, std::size_t max_in_degree = 3);

/// 1 -> 2 -> ... -> n; automaton 1 is a source (positive loop) and arc k
/// (from k to k+1, 0-based) is negative when negative[k].
[[nodiscard]] Ban path_ban(const std::vector<bool>& negative);

/// 1 -> 2 -> ... -> n -> 1 with the given arc signs.
[[nodiscard]] Ban cycle_ban(const std::vector<bool>& negative);

[[nodiscard]] Ban random_path(std::size_t n, Rng& rng);
[[nodiscard]] Ban random_cycle(std::size_t n, Rng& rng, bool positive);

/// All 256 networks of two automata, one per pair of truth tables.
[[nodiscard]] std::vector<Ban> all_two_automaton_bans();

/// Every monotone network over automata 1..n whose arcs go from lower to
/// higher ids, each automaton either a positive source loop or a function
/// of full support over its in-neighbours. Returns the number visited.
std::size_t for_each_acyclic_monotone(std::size_t n,
                                      const std::function<void(const Ban&)>& visit);

[[nodiscard]] Configuration random_configuration(std::size_t n, Rng& rng);

/// Moves a random unstable automaton until max_length moves or a stable
/// configuration.
[[nodiscard]] Trajectory random_trajectory(const Ban& ban, const Configuration& x,
                                           std::size_t max_length, Rng& rng);

/// Updates random automata, effective or not.
[[nodiscard]] Streamline random_streamline(const Ban& ban, const Configuration& x,
                                           std::size_t length, Rng& rng);

}  // namespace bankit
