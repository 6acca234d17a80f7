#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bankit/ban.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/report.hpp"

namespace bankit {

/// Whether the state of j in x is passed on to i when i is updated in x:
/// the arc (j, i) exists and sign(j, i) = nabla(x, j) * nabla(x', i) where
/// x' is x after the update. Throws non_monotone_arc for a `both` arc.
[[nodiscard]] bool transmits(const Ban& ban, const Configuration& x,
                             Automaton j, Automaton i);

/// A potential <t, j>, identified by the time j last took its state: 0 for
/// an original potential, s + 1 when j was updated at step s.
struct Potential {
  std::size_t birth = 0;
  Automaton automaton = 0;

  [[nodiscard]] bool original() const { return birth == 0; }
  /// "<t,j>" with a 1-based automaton.
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Potential&, const Potential&) = default;
};

/// Carrier sets of the original potentials: at(j, t) = R*_j(t).
struct CarrierTable {
  std::size_t n = 0;
  /// sets[j][t] for t = 0..T.
  std::vector<std::vector<AutomatonSet>> sets;

  [[nodiscard]] std::size_t steps() const {
    return sets.empty() ? 0 : sets.front().size() - 1;
  }
  [[nodiscard]] AutomatonSet at(Automaton j, std::size_t t) const {
    return sets[j][t];
  }
  /// First t with an empty carrier set.
  [[nodiscard]] std::optional<std::size_t> loss_time(Automaton j) const;
  /// Originals still carried at the last step.
  [[nodiscard]] AutomatonSet survivors() const;
};

[[nodiscard]] CarrierTable carrier_tables(const Ban& ban, const Streamline& line);

/// Set of potentials with their ancestors and descendants along one
/// streamline. Lineages of non-original potentials are computed on demand.
class PotentialTracker {
 public:
  PotentialTracker(const Ban& ban, Streamline line);

  [[nodiscard]] const Streamline& line() const { return line_; }
  [[nodiscard]] const std::vector<Configuration>& configs() const {
    return configs_;
  }
  [[nodiscard]] std::size_t length() const { return line_.length(); }

  /// The potential automaton i carries at time t.
  [[nodiscard]] Potential potential_at(Automaton i, std::size_t t) const;
  /// Every potential born along the streamline, originals first.
  [[nodiscard]] std::vector<Potential> all_potentials() const;
  /// Direct parents under the transmission relation.
  [[nodiscard]] std::vector<Potential> parents(const Potential& p) const;
  /// R*(p, t) for t = 0..T; empty before p's birth.
  [[nodiscard]] const std::vector<AutomatonSet>& carriers(const Potential& p) const;

 private:
  const Ban* ban_;
  Streamline line_;
  std::vector<Configuration> configs_;
  // birth_at_[t][i]: birth of the potential i carries at time t.
  std::vector<std::vector<std::size_t>> birth_at_;
  mutable std::vector<std::optional<std::vector<AutomatonSet>>> memo_;
  [[nodiscard]] std::size_t memo_index(const Potential& p) const;
};

/// Potential charge of automaton i at time t.
struct Charge {
  std::vector<Potential> direct;           // P(i, t)
  std::vector<Potential> inherited;        // P*(i, t)
  std::vector<Potential> direct_original;  // P0(i, t)
  std::vector<Potential> inherited_original;  // P0*(i, t)
};

[[nodiscard]] Charge charge(const Ban& ban, const Streamline& line, Automaton i,
                            std::size_t t);
[[nodiscard]] Charge charge(const PotentialTracker& tracker, Automaton i,
                            std::size_t t);

struct SurvivorReport {
  /// Originals with a non-empty carrier set at the end.
  AutomatonSet survivors;
  /// Loss time of every original, empty for survivors.
  std::vector<std::optional<std::size_t>> lost;
};

[[nodiscard]] SurvivorReport survivors(const Ban& ban, const Streamline& line);
[[nodiscard]] SurvivorReport survivors(const Ban& ban, const Trajectory& traj);

inline constexpr std::size_t kSuperSurvivorMaxN = 12;

/// Survivors that no continuation of updates from the destination can erase.
/// Throws not_recurrent_destination when the destination is not recurrent
/// and too_large for n > 12.
[[nodiscard]] AutomatonSet super_survivors(const Ban& ban, const Streamline& line);
[[nodiscard]] AutomatonSet super_survivors(const Ban& ban, const Trajectory& traj);

/// Same, with the attractor set of ban already computed.
[[nodiscard]] AutomatonSet super_survivors(const Ban& ban, const AttractorSet& atts,
                                           const Streamline& line);

/// Whether a carrier set `carried` in recurrent configuration y can be emptied
/// by some sequence of updates.
[[nodiscard]] bool can_be_lost(const Ban& ban, const Configuration& y,
                               AutomatonSet carried);

struct PotentialCheckOptions {
  /// The trajectory is a shortest one (enables the transmission form of the
  /// survivor-only property).
  bool shortest = false;
};

/// Checks of the potential results on one trajectory: "lineage_sign" signs of
/// lineage paths, "nonempty_charge" after the first update,
/// "same_potential_same_move" on nice networks, "fresh_potential" at every
/// move, "survivor_transmission" on shortest trajectories,
/// "favourable_survivor" at stable destinations, plus "inheritance",
/// "monotone_loss" and "survivor_bound".
[[nodiscard]] CheckReport verify_potentials(
    const Ban& ban, const Trajectory& traj, PotentialCheckOptions options = {});

enum class Verdict { holds, counterexample, inconclusive };

[[nodiscard]] std::string_view to_string(Verdict v);

struct ConjectureResult {
  Verdict verdict = Verdict::inconclusive;
  /// A shortest trajectory on which only super-survivor original potential is
  /// transmitted (holds), or the lexicographically first shortest trajectory
  /// (counterexample).
  std::optional<Trajectory> witness;
  std::size_t examined = 0;
  bool truncated = false;
  std::size_t distance = 0;
};

/// Searches the shortest trajectories from x to attractor `a` for one on
/// which only super-survivor original potential is transmitted.
[[nodiscard]] ConjectureResult survivor_only_search(
    const Ban& ban, const Configuration& x, const Attractor& a,
    std::size_t cap = kShortestEnumerationCap);

/// Whether every original potential transmitted along traj is one of
/// `supers`.
[[nodiscard]] bool transmits_only(const Ban& ban, const Trajectory& traj,
                                  AutomatonSet supers);

/// Example-style tables: one row per original, one column per time step.
[[nodiscard]] std::string carrier_csv(const CarrierTable& table);

}  // namespace bankit
