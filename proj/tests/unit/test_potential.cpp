#include <doctest.h>

#include "bankit/core.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/generate.hpp"
#include "bankit/potential.hpp"
#include "support.hpp"

using namespace bankit;
using bankit::test::cfg;
using bankit::test::ids;

namespace {

// Carrier sets of the originals straight from the rule: the updated
// automaton k carries <0,j> afterwards iff some carrier in-neighbour of k
// transmits to it.
std::vector<std::vector<AutomatonSet>> carrier_oracle(const Ban& ban, const Streamline& line) {
  const std::size_t n = ban.size();
  std::vector<std::vector<AutomatonSet>> sets(n);
  for (Automaton j = 0; j < n; ++j) sets[j].push_back(AutomatonSet::single(j));
  Configuration x = line.x0;
  for (Automaton k : line.updates) {
    const Configuration next = step(ban, x, k);
    for (Automaton j = 0; j < n; ++j) {
      AutomatonSet s = sets[j].back();
      bool gets = false;
      for (Automaton c : s.members()) {
        const ArcSign sign = ban.arc_sign(c, k);
        if (sign != ArcSign::absent && sign_value(sign) == nabla(x, c) * nabla(next, k)) gets = true;
      }
      if (gets) {
        s.insert(k);
      } else {
        s.erase(k);
      }
      sets[j].push_back(s);
    }
    x = next;
  }
  return sets;
}

}  // namespace

TEST_SUITE("potential") {
  TEST_CASE("transmission agrees with the straightened input") {
    Rng rng(41);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + below(rng, 5);
      const Ban ban = random_monotone_ban(n, rng);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const Configuration x(n, b);
        for (Automaton i = 0; i < n; ++i) {
          const Configuration next = step(ban, x, i);
          for (Automaton j : ban.in_neighbours(i).members()) {
            CHECK(transmits(ban, x, j, i) == (neighbour_input(ban, x, j, i) == next[i]));
          }
        }
      }
    }
  }

  TEST_CASE("carrier tables follow the update rule") {
    Rng rng(42);
    for (int k = 0; k < 300; ++k) {
      const std::size_t n = 1 + below(rng, 6);
      const Ban ban = random_monotone_ban(n, rng);
      const Streamline line = random_streamline(ban, random_configuration(n, rng), 20, rng);
      const CarrierTable table = carrier_tables(ban, line);
      CHECK(table.sets == carrier_oracle(ban, line));
    }
  }

  TEST_CASE("example 2, second series") {
    const Ban ban = parse_ban(test::kExample2);
    const CarrierTable t = carrier_tables(ban, {cfg("1100"), test::moves({3, 4})});
    CHECK(t.at(0, 1) == ids({1, 3}));
    CHECK(t.at(0, 2) == ids({1, 3, 4}));
    CHECK(t.at(1, 1) == ids({2}));
    CHECK(t.at(1, 2) == ids({2, 4}));
    CHECK(t.at(2, 1).empty());
    CHECK(t.at(3, 1) == ids({4}));
    CHECK(t.at(3, 2).empty());
  }

  TEST_CASE("example 2, first series under the transmission rule") {
    const Ban ban = parse_ban(test::kExample2);
    const Streamline line{cfg("1100"), test::moves({4, 3, 4})};
    const CarrierTable t = carrier_tables(ban, line);
    CHECK(t.at(0, 3) == ids({1, 3, 4}));
    CHECK(t.at(1, 3) == ids({2, 4}));
    // 3 is in state 0 while 4 rises, so it does not transmit at step 0.
    CHECK(t.at(2, 1) == ids({3}));
    CHECK(t.at(2, 3).empty());
    CHECK(t.at(3, 1).empty());
    CHECK(survivors(ban, line).survivors == ids({1, 2}));
    CHECK(super_survivors(ban, line) == ids({1, 2}));
  }

  TEST_CASE("example 1 potential facts") {
    const Ban ban = parse_ban(test::kExample1);
    const Trajectory traj{cfg("10110"), test::moves({1, 3, 5, 1, 2, 4, 1, 5})};
    const PotentialTracker tracker(ban, Streamline::of(traj));
    // 1 moves at step 3 and picks up what 4 and 5 carry at t = 3.
    const Potential moved = tracker.potential_at(0, 4);
    CHECK(moved == Potential{4, 0});
    const auto parents = tracker.parents(moved);
    CHECK(parents == std::vector<Potential>{tracker.potential_at(3, 3), tracker.potential_at(4, 3)});
  }

  TEST_CASE("charges on example 1") {
    const Ban ban = parse_ban(test::kExample1);
    const Trajectory traj{cfg("10110"), test::moves({1, 3, 5, 1, 2, 4, 1, 5})};
    const Charge c = charge(ban, Streamline::of(traj), 0, 4);
    CHECK_FALSE(c.direct.empty());
    CHECK(std::all_of(c.direct_original.begin(), c.direct_original.end(),
                      [](const Potential& p) { return p.original(); }));
  }

  TEST_CASE("losses are permanent and survivors match the last column") {
    Rng rng(43);
    for (int k = 0; k < 300; ++k) {
      const std::size_t n = 1 + below(rng, 6);
      const Ban ban = random_monotone_ban(n, rng);
      const Streamline line = random_streamline(ban, random_configuration(n, rng), 20, rng);
      const CarrierTable t = carrier_tables(ban, line);
      const SurvivorReport r = survivors(ban, line);
      for (Automaton j = 0; j < n; ++j) {
        bool lost = false;
        for (std::size_t s = 0; s <= t.steps(); ++s) {
          if (lost) CHECK(t.at(j, s).empty());
          lost |= t.at(j, s).empty();
        }
        CHECK(r.survivors.contains(j) == !t.at(j, t.steps()).empty());
        CHECK(r.lost[j] == t.loss_time(j));
      }
    }
  }

  TEST_CASE("super-survivors are survivors that no update sequence erases") {
    Rng rng(44);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 2 + below(rng, 3);
      const Ban ban = random_acyclic_ban(n, rng);
      const TransitionGraph g(ban);
      const AttractorSet atts = attractors(g);
      const Configuration x = random_configuration(n, rng);
      const Attractor& a = atts.attractors[below(rng, atts.attractors.size())];
      const auto dist = distances_from(g, x.bits());
      if (dist[a.members.front()] == kUnreachable) continue;
      const Trajectory t = shortest_to_attractor(g, x, a);
      const AutomatonSet supers = super_survivors(ban, t);
      const CarrierTable table = carrier_tables(ban, Streamline::of(t));
      CHECK((supers.mask() & ~table.survivors().mask()) == 0);
      // Oracle: random continuations from y never erase a super-survivor.
      for (int r = 0; r < 30; ++r) {
        Streamline longer = Streamline::of(t);
        for (int u = 0; u < 12; ++u) longer.updates.push_back(below(rng, n));
        const AutomatonSet left = carrier_tables(ban, longer).survivors();
        CHECK((supers.mask() & ~left.mask()) == 0);
      }
    }
  }

  TEST_CASE("can_be_lost on a positive source loop") {
    const Ban ban = parse_ban("1: x1\n2: x1\n");
    CHECK_FALSE(can_be_lost(ban, cfg("11"), ids({1})));
    CHECK(can_be_lost(ban, cfg("11"), ids({2})));
  }

  TEST_CASE("no potential check fails on random trajectories") {
    Rng rng(45);
    for (int k = 0; k < 300; ++k) {
      const std::size_t n = 2 + below(rng, 4);
      const Ban ban = k % 2 ? random_nice_ban(n, rng) : random_monotone_ban(n, rng);
      const Trajectory t = random_trajectory(ban, random_configuration(n, rng), 20, rng);
      for (const Check& c : verify_potentials(ban, t).checks) {
        CHECK_MESSAGE(c.status != CheckStatus::violated, c.name << ": " << c.witness);
      }
    }
  }

  TEST_CASE("survivor-only search on a path") {
    // 1 -> 2 -> 3 with a source loop on 1: moving 3 hands it the copy of
    // <0,2>, which updating 2 then 3 erases again.
    const Ban ban = parse_ban("1: x1\n2: x1\n3: x2\n");
    const AttractorSet atts = attractors(ban);
    const Attractor& a = atts.attractors[*atts.attractor_of(cfg("111").bits())];
    const ConjectureResult r = survivor_only_search(ban, cfg("110"), a, 1000);
    CHECK(r.verdict == Verdict::counterexample);
    CHECK(r.distance == 1);
    CHECK(r.examined == 1);
    const ConjectureResult same = survivor_only_search(ban, cfg("111"), a, 1000);
    CHECK(same.verdict == Verdict::holds);
  }

  TEST_CASE("carrier csv") {
    const Ban ban = parse_ban(test::kExample2);
    const std::string csv = carrier_csv(carrier_tables(ban, {cfg("1100"), test::moves({3, 4})}));
    CHECK(csv.rfind("potential,t0,t1,t2\n", 0) == 0);
    CHECK(csv.find("\"<0,3>\",\"{3}\",\"{}\",\"{}\"") != std::string::npos);
  }
}
