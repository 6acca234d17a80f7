#include <doctest.h>

#include <deque>
#include <map>

#include "bankit/core.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/error.hpp"
#include "bankit/generate.hpp"
#include "support.hpp"

using namespace bankit;
using bankit::test::cfg;

namespace {

// Plain BFS on configurations, flipping one unstable automaton at a time.
std::map<std::uint64_t, std::size_t> bfs(const Ban& ban, const Configuration& x) {
  std::map<std::uint64_t, std::size_t> dist{{x.bits(), 0}};
  std::deque<Configuration> queue{x};
  while (!queue.empty()) {
    const Configuration u = queue.front();
    queue.pop_front();
    for (Automaton i = 0; i < ban.size(); ++i) {
      if (ban.eval(i, u) == u[i]) continue;
      const Configuration v = u.flipped(i);
      if (dist.emplace(v.bits(), dist[u.bits()] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

// Every move sequence of exactly `len` moves from x, in lexicographic order.
void sequences(const Ban& ban, const Configuration& x, std::size_t len,
               std::vector<Automaton>& prefix,
               const std::function<void(const std::vector<Automaton>&, const Configuration&)>& f) {
  if (prefix.size() == len) {
    f(prefix, x);
    return;
  }
  for (Automaton i = 0; i < ban.size(); ++i) {
    if (ban.eval(i, x) == x[i]) continue;
    prefix.push_back(i);
    sequences(ban, x.flipped(i), len, prefix, f);
    prefix.pop_back();
  }
}

}  // namespace

TEST_SUITE("dynamics") {
  TEST_CASE("example 1: the lexicographically first shortest trajectory") {
    const Ban ban = parse_ban(test::kExample1);
    const auto t = shortest_trajectory(ban, cfg("10110"), cfg("01000"));
    REQUIRE(t);
    CHECK(t->length() == 8);
    CHECK(t->moves == test::moves({1, 3, 5, 1, 2, 4, 1, 5}));
    const std::vector<std::string> expected{"10110", "00110", "00010", "00011", "10011",
                                            "11011", "11001", "01001", "01000"};
    const auto cs = t->configs();
    REQUIRE(cs.size() == expected.size());
    for (std::size_t s = 0; s < cs.size(); ++s) CHECK(cs[s].to_string() == expected[s]);
    CHECK(unstable_set(ban, cfg("01000")).empty());
  }

  TEST_CASE("example 1 requires reversibility") {
    const Ban ban = parse_ban(test::kExample1);
    const ReversibilityReport r = requires_reversibility(ban, cfg("10110"), cfg("01000"));
    CHECK(r.distance == 8);
    CHECK(r.hamming == 4);
    CHECK(r.is_long);
    CHECK(r.all_shortest_long);
    CHECK_FALSE(r.truncated);
    // Automaton 1 moves three times on every one of them.
    std::size_t count = 0;
    std::vector<Automaton> prefix;
    sequences(ban, cfg("10110"), 8, prefix, [&](const auto& m, const Configuration& end) {
      if (end == cfg("01000")) {
        ++count;
        CHECK(std::count(m.begin(), m.end(), Automaton{0}) == 3);
      }
    });
    CHECK(r.shortest_count == count);
  }

  TEST_CASE("step applies f_i and leaves stable automata alone") {
    const Ban ban = parse_ban(test::kExample1);
    CHECK(step(ban, cfg("10110"), 0) == cfg("00110"));
    CHECK(step(ban, cfg("10110"), 2) == cfg("10110"));
  }

  TEST_CASE("trajectory validation") {
    const Ban ban = parse_ban(test::kExample1);
    CHECK_FALSE(check_trajectory(ban, {cfg("10110"), test::moves({1, 3})}));
    CHECK(check_trajectory(ban, {cfg("10110"), test::moves({3})}));
    CHECK_THROWS_AS(validate_trajectory(ban, {cfg("10110"), test::moves({4})}), Error);
  }

  TEST_CASE("distances agree with a plain BFS") {
    Rng rng(21);
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = 1 + below(rng, 6);
      const Ban ban = k % 2 ? random_ban(n, rng) : random_monotone_ban(n, rng);
      const TransitionGraph g(ban);
      const Configuration x = random_configuration(n, rng);
      const auto oracle = bfs(ban, x);
      const auto dist = distances_from(g, x.bits());
      for (std::uint64_t y = 0; y < dist.size(); ++y) {
        const auto it = oracle.find(y);
        if (it == oracle.end()) {
          CHECK(dist[y] == kUnreachable);
        } else {
          CHECK(dist[y] == it->second);
        }
      }
    }
  }

  TEST_CASE("shortest trajectories are lexicographically first") {
    Rng rng(22);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 2 + below(rng, 3);
      const Ban ban = random_monotone_ban(n, rng);
      const Configuration x = random_configuration(n, rng);
      const Configuration y = random_configuration(n, rng);
      const auto oracle = bfs(ban, x);
      const auto t = shortest_trajectory(ban, x, y);
      const auto it = oracle.find(y.bits());
      REQUIRE(t.has_value() == (it != oracle.end()));
      if (!t) continue;
      CHECK(t->length() == it->second);
      std::optional<std::vector<Automaton>> first;
      std::vector<Automaton> prefix;
      sequences(ban, x, it->second, prefix, [&](const auto& m, const Configuration& end) {
        if (!first && end == y) first = m;
      });
      REQUIRE(first);
      CHECK(t->moves == *first);
    }
  }

  TEST_CASE("attractors are the configurations that reach back everything they reach") {
    Rng rng(23);
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = 1 + below(rng, 5);
      const Ban ban = k % 2 ? random_ban(n, rng) : random_monotone_ban(n, rng);
      const AttractorSet a = attractors(ban);
      std::vector<std::map<std::uint64_t, std::size_t>> reach;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) reach.push_back(bfs(ban, Configuration(n, b)));
      std::size_t stable = 0;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        bool recurrent = true;
        for (const auto& [c, d] : reach[b]) recurrent &= reach[c].contains(b);
        CHECK(a.recurrent(b) == recurrent);
        stable += unstable_set(ban, Configuration(n, b)).empty();
        if (recurrent) {
          const Attractor& at = a.attractors[*a.attractor_of(b)];
          CHECK(at.size() == reach[b].size());
        }
      }
      CHECK(a.stable_count() == stable);
    }
  }

  TEST_CASE("the shortest trajectory to an attractor ends in it") {
    const Ban ban = parse_ban("1: !x2\n2: x1\n3: x3 | x1\n");
    const AttractorSet a = attractors(ban);
    for (std::uint64_t b = 0; b < 8; ++b) {
      for (const Attractor& at : a.attractors) {
        const auto reach = bfs(ban, Configuration(3, b));
        std::size_t best = SIZE_MAX;
        for (std::uint64_t m : at.members) {
          if (auto it = reach.find(m); it != reach.end()) best = std::min(best, it->second);
        }
        if (best == SIZE_MAX) {
          CHECK_THROWS_AS((void)shortest_to_attractor(ban, Configuration(3, b), at), Error);
          continue;
        }
        const Trajectory t = shortest_to_attractor(ban, Configuration(3, b), at);
        CHECK(at.contains(t.destination().bits()));
        CHECK(t.length() == best);
      }
    }
  }

  TEST_CASE("hamiltonian shortest trajectories on two automata") {
    std::size_t found = 0;
    for (const Ban& ban : all_two_automaton_bans()) {
      const auto t = hamiltonian_shortest(ban);
      // Oracle: some x from which the farthest configuration is 3 moves away.
      bool oracle = false;
      for (std::uint64_t b = 0; b < 4; ++b) {
        for (const auto& [c, d] : bfs(ban, Configuration(2, b))) oracle |= d == 3;
      }
      CHECK(t.has_value() == oracle);
      if (t) {
        ++found;
        CHECK(t->length() == 3);
        CHECK(unstable_set(ban, t->x0).size() == 1);
      }
    }
    CHECK(found > 0);
    CHECK_THROWS_AS((void)hamiltonian_shortest(parse_ban("1: x1\n2: x2\n3: x3\n4: x4\n5: x5\n")), Error);
  }
}
