#include <doctest.h>

#include <set>

#include "bankit/error.hpp"
#include "bankit/generate.hpp"
#include "bankit/graph.hpp"
#include "support.hpp"

using namespace bankit;
using bankit::test::cfg;
using bankit::test::ids;

namespace {

// Signs of all walks of length 1..2n from j to i, by dynamic programming over
// (node, sign) without the library's reachability code.
PathSign walk_sign(const SignedDigraph& g, Automaton j, Automaton i) {
  const std::size_t n = g.size();
  std::vector<std::array<bool, 2>> cur(n, {false, false});  // [node][sign<0]
  for (Automaton k : g.successors(j).members()) {
    cur[k][g.sign(j, k) == ArcSign::negative] = true;
  }
  bool pos = false;
  bool neg = false;
  for (std::size_t len = 1; len <= 2 * n; ++len) {
    pos |= cur[i][0];
    neg |= cur[i][1];
    std::vector<std::array<bool, 2>> next(n, {false, false});
    for (Automaton u = 0; u < n; ++u) {
      for (int s = 0; s < 2; ++s) {
        if (!cur[u][s]) continue;
        for (Automaton v : g.successors(u).members()) {
          next[v][s ^ (g.sign(u, v) == ArcSign::negative)] = true;
        }
      }
    }
    cur = next;
  }
  if (pos && neg) return PathSign::contradictory;
  if (pos) return PathSign::positive;
  if (neg) return PathSign::negative;
  return PathSign::none;
}

std::vector<Ban> monotone_sample(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Ban> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + below(rng, 6);
    switch (k % 3) {
      case 0: out.push_back(random_monotone_ban(n, rng)); break;
      case 1: out.push_back(random_nice_ban(n, rng)); break;
      default: out.push_back(random_nice_ban(n, rng, true)); break;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("example 1 is totally positive") {
    const Ban ban = parse_ban(test::kExample1);
    const Classification c = classify(ban);
    CHECK(c.monotone);
    CHECK(c.nice);
    CHECK(c.totally_positive);
    CHECK(c.witness.empty());
    const SignedDigraph g = interaction_graph(ban);
    CHECK(g.arc_count() == 11);
    CHECK(g.predecessors(0) == ids({4, 5}));
    CHECK(g.sign(1, 1) == ArcSign::positive);
  }

  TEST_CASE("a negative cycle is not nice") {
    const Classification c = classify(parse_ban("1: !x2\n2: x1\n"));
    CHECK(c.monotone);
    CHECK_FALSE(c.nice);
    CHECK_FALSE(c.totally_positive);
    CHECK_FALSE(c.witness.empty());
  }

  TEST_CASE("contradictory paths without a negative cycle are not nice") {
    const Classification c = classify(parse_ban("1: x1\n2: x1\n3: x1 & !x2\n"));
    CHECK(c.monotone);
    CHECK_FALSE(c.nice);
  }

  TEST_CASE("path signs agree with walk enumeration") {
    for (const Ban& ban : monotone_sample(300, 11)) {
      const SignedDigraph g = interaction_graph(ban);
      const auto m = path_sign_matrix(g);
      bool contradictory = false;
      for (Automaton j = 0; j < g.size(); ++j) {
        for (Automaton i = 0; i < g.size(); ++i) {
          const PathSign expected = walk_sign(g, j, i);
          CHECK(m[j][i] == expected);
          CHECK(path_sign_star(g, j, i) == expected);
          contradictory |= expected == PathSign::contradictory;
        }
      }
      const Classification c = classify(ban);
      CHECK(c.nice == !contradictory);
      bool all_positive = true;
      for (const SignedArc& a : g.arcs()) all_positive &= a.sign == ArcSign::positive;
      CHECK(c.totally_positive == (c.nice && all_positive));
    }
  }

  TEST_CASE("has_walk by exact length") {
    const SignedDigraph g = interaction_graph(parse_ban("1: x3\n2: !x1\n3: x2\n"));
    // Negative 3-cycle: walks from 1 back to 1 of length 3 are negative.
    CHECK(has_walk(g, 0, 0, 3, -1));
    CHECK_FALSE(has_walk(g, 0, 0, 3, 1));
    CHECK(has_walk(g, 0, 0, 6, 1));
    CHECK_FALSE(has_walk(g, 0, 1, 2, 0));
  }

  TEST_CASE("strongly connected components match mutual reachability") {
    for (const Ban& ban : monotone_sample(200, 12)) {
      const SignedDigraph g = interaction_graph(ban);
      const std::size_t n = g.size();
      std::vector<AutomatonSet> reach(n);
      for (Automaton u = 0; u < n; ++u) reach[u] = AutomatonSet::single(u) | g.successors(u);
      for (std::size_t round = 0; round < n; ++round) {
        for (Automaton u = 0; u < n; ++u) {
          for (Automaton v : reach[u].members()) reach[u] |= g.successors(v);
        }
      }
      const auto sccs = strongly_connected_components(g);
      std::size_t covered = 0;
      for (const auto& c : sccs) {
        covered += c.size();
        for (Automaton a : c) {
          for (Automaton b : c) CHECK((reach[a].contains(b) && reach[b].contains(a)));
        }
      }
      CHECK(covered == n);
      CHECK(is_strongly_connected(g) == (sccs.size() == 1));
    }
  }

  TEST_CASE("acyclic except loops") {
    CHECK(acyclic_except_loops(interaction_graph(parse_ban("1: x1\n2: x1 & x2\n3: !x2\n"))));
    CHECK_FALSE(acyclic_except_loops(interaction_graph(parse_ban("1: x2\n2: x1\n"))));
  }

  TEST_CASE("reformulation makes nice strongly connected networks totally positive") {
    Rng rng(13);
    for (int k = 0; k < 200; ++k) {
      const Ban ban = random_nice_ban(2 + below(rng, 5), rng, true);
      const Reformulation r = reformulate_totally_positive(ban);
      CHECK(classify(r.ban).totally_positive);
      CHECK_FALSE(r.flipped.contains(0));
    }
  }

  TEST_CASE("depths are longest paths from the grounds") {
    // 1 -> 2 -> 3, 1 -> 3: depth of 3 is 2.
    const SignedDigraph g = interaction_graph(parse_ban("1: x1\n2: x1\n3: x1 & x2\n"));
    const DepthMap d = depths(g, ids({1}));
    CHECK(d.depth[0] == 0U);
    CHECK(d.depth[1] == 1U);
    CHECK(d.depth[2] == 2U);
    const SignedDigraph cyc = interaction_graph(parse_ban("1: x1\n2: x1 | x3\n3: x2\n"));
    CHECK_THROWS_AS((void)depths(cyc, ids({1})), Error);
  }

  TEST_CASE("favour sets follow the sign rule") {
    for (const Ban& ban : monotone_sample(100, 14)) {
      const std::size_t n = ban.size();
      for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << n); ++yb) {
        const Configuration y(n, yb);
        const FavourSets fs = favour_sets(ban, y);
        const FavourGraph h = favour_graph(ban, y);
        for (Automaton i = 0; i < n; ++i) {
          for (Automaton j = 0; j < n; ++j) {
            const ArcSign s = ban.arc_sign(j, i);
            if (s == ArcSign::absent) {
              CHECK_FALSE((fs.in_plus(j, i) || fs.in_minus(j, i)));
              continue;
            }
            const bool plus = sign_value(s) == bs(y[j]) * bs(y[i]);
            CHECK(fs.in_plus(j, i) == plus);
            CHECK(fs.in_minus(j, i) == !plus);
            if (plus) CHECK(h.has_arc(j, i));
            if (!plus) CHECK(h.has_arc(i, j));
          }
        }
      }
    }
  }

  TEST_CASE("cycle sign parity against disfavourable arcs") {
    for (const Ban& ban : monotone_sample(100, 15)) {
      const std::size_t n = ban.size();
      for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << n); ++yb) {
        CHECK_FALSE(validate_favour_cycles(ban, Configuration(n, yb)).parity_violation);
      }
    }
  }

  TEST_CASE("a cycle made only of disfavourable arcs exists") {
    // Negative 2-cycle 1 <-> 2, both arcs disfavourable for y = 111.
    const Ban ban = parse_ban("1: !x2 | x3\n2: !x1 | x3\n3: x3\n");
    const FavourCycleReport r = validate_favour_cycles(ban, cfg("111"));
    REQUIRE(r.all_minus_cycle);
    CHECK(r.all_minus_cycle->size() == 2);
    CHECK_FALSE(r.parity_violation);
  }

  TEST_CASE("elementary cycles") {
    const auto cycles = elementary_cycles(interaction_graph(parse_ban("1: x1 | x2\n2: x1\n")));
    const std::set<std::vector<Automaton>> got(cycles.begin(), cycles.end());
    CHECK(got == std::set<std::vector<Automaton>>{{0}, {0, 1}});
  }

  TEST_CASE("dot output") {
    const std::string dot = to_dot(interaction_graph(parse_ban("1: !x2\n2: x1\n")), "G");
    CHECK(dot.find("digraph G") != std::string::npos);
    CHECK(dot.find("\"-\"") != std::string::npos);
  }
}
