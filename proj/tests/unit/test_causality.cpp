#include <doctest.h>

#include "bankit/causality.hpp"
#include "bankit/core.hpp"
#include "bankit/generate.hpp"
#include "support.hpp"

using namespace bankit;
using bankit::test::cfg;

namespace {

struct Sample {
  Ban ban;
  Trajectory traj;
};

std::vector<Sample> samples(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Sample> out;
  while (out.size() < count) {
    const std::size_t n = 2 + below(rng, 5);
    Ban ban = out.size() % 2 ? random_nice_ban(n, rng) : random_monotone_ban(n, rng);
    const Configuration x = random_configuration(n, rng);
    Trajectory t = random_trajectory(ban, x, 25, rng);
    if (t.length() > 0) out.push_back({std::move(ban), std::move(t)});
  }
  return out;
}

bool stable_in(const Ban& ban, const Configuration& x, Automaton i) { return ban.eval(i, x) == x[i]; }

}  // namespace

TEST_SUITE("causality") {
  TEST_CASE("example 1 forest") {
    const Ban ban = parse_ban(test::kExample1);
    const Trajectory t{cfg("10110"), test::moves({1, 3, 5, 1, 2, 4, 1, 5})};
    const TauForest f = tau_forest(ban, t);
    REQUIRE(f.size() == 8);
    // 1, 2 and 5 are unstable from the start; 3 waits for 1.
    CHECK(f.kind[0] == StepKind::root);
    CHECK(f.kind[1] == StepKind::caused);
    CHECK(f.tau[1] == 0U);
    CHECK(f.tau[6] == 5U);
    CHECK(f.tau[7] == 6U);
    CHECK(f.tree_count == 2);
    CHECK(f.strongly_acyclic());
    CHECK(kappa(ban, t, 6) == std::vector<std::size_t>{3, 5});
    CHECK(kappa(ban, t, 7) == std::vector<std::size_t>{1, 2, 5, 6});
    CHECK(verify_causality(ban, t).ok());
  }

  TEST_CASE("tau follows its definition") {
    for (const Sample& s : samples(300, 31)) {
      const TauForest f = tau_forest(s.ban, s.traj);
      const auto xs = s.traj.configs();
      for (std::size_t t = 0; t < s.traj.length(); ++t) {
        const Automaton i = s.traj.moves[t];
        std::optional<std::size_t> last;
        for (std::size_t u = 0; u < t; ++u) {
          if (stable_in(s.ban, xs[u], i)) last = u;
        }
        bool moved_since = false;
        for (std::size_t u = last ? *last + 1 : 0; u < t; ++u) moved_since |= s.traj.moves[u] == i;
        if (moved_since) {
          CHECK(f.kind[t] == StepKind::undefined);
        } else if (last) {
          CHECK(f.kind[t] == StepKind::caused);
          CHECK(f.tau[t] == last);
        } else {
          CHECK(f.kind[t] == StepKind::root);
        }
      }
    }
  }

  TEST_CASE("tau pairs carry the sign of the move product") {
    for (const Sample& s : samples(300, 32)) {
      const TauForest f = tau_forest(s.ban, s.traj);
      const auto xs = s.traj.configs();
      for (std::size_t t = 0; t < s.traj.length(); ++t) {
        if (!f.tau[t]) continue;
        const std::size_t u = *f.tau[t];
        const Automaton j = s.traj.moves[u];
        const Automaton i = s.traj.moves[t];
        const ArcSign sign = s.ban.arc_sign(j, i);
        REQUIRE(sign != ArcSign::absent);
        CHECK(sign_value(sign) == nabla(xs[u], j) * nabla(xs[t], i));
      }
    }
  }

  TEST_CASE("undefined causes need a negative loop") {
    for (const Sample& s : samples(300, 33)) {
      const TauForest f = tau_forest(s.ban, s.traj);
      for (std::size_t t : f.undefined) {
        const Automaton i = s.traj.moves[t];
        CHECK(s.ban.arc_sign(i, i) == ArcSign::negative);
      }
    }
  }

  TEST_CASE("kappa follows its definition") {
    for (const Sample& s : samples(200, 34)) {
      const auto xs = s.traj.configs();
      for (std::size_t t1 = 0; t1 < s.traj.length(); ++t1) {
        const Automaton i = s.traj.moves[t1];
        std::vector<std::size_t> expected;
        for (std::size_t t = 0; t < t1; ++t) {
          const Automaton j = s.traj.moves[t];
          bool again = false;
          for (std::size_t u = t + 1; u < t1; ++u) again |= s.traj.moves[u] == j;
          if (!again && stable_in(s.ban, xs[t1].flipped(j), i)) expected.push_back(t);
        }
        CHECK(kappa(s.ban, s.traj, t1) == expected);
      }
    }
  }

  TEST_CASE("chains descend to a root or an undefined step") {
    for (const Sample& s : samples(200, 35)) {
      const TauForest f = tau_forest(s.ban, s.traj);
      CHECK(f.strongly_acyclic());
      for (std::size_t t = 0; t < f.size(); ++t) {
        const auto c = f.chain(t);
        REQUIRE_FALSE(c.empty());
        CHECK(c.front() == t);
        CHECK(f.kind[c.back()] != StepKind::caused);
        for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k] < c[k - 1]);
        CHECK(f.tree[c.back()] == f.tree[t]);
      }
      CHECK(f.tree_count == f.roots.size() + f.undefined.size());
    }
  }

  TEST_CASE("G_tau is a subgraph of G") {
    for (const Sample& s : samples(200, 36)) {
      const SignedDigraph g = interaction_graph(s.ban);
      for (const SignedArc& a : g_tau(s.ban, s.traj).arcs()) CHECK(g.sign(a.from, a.to) == a.sign);
    }
  }

  TEST_CASE("no check fails on random trajectories") {
    for (const Sample& s : samples(300, 37)) {
      const CheckReport r = verify_causality(s.ban, s.traj);
      for (const Check& c : r.checks) CHECK_MESSAGE(c.status != CheckStatus::violated, c.name << ": " << c.witness);
    }
  }

  TEST_CASE("anti-graph dot labels steps with their movers") {
    const Ban ban = parse_ban(test::kExample1);
    const Trajectory t{cfg("10110"), test::moves({1, 3})};
    const std::string dot = anti_graph_dot(tau_forest(ban, t), t);
    CHECK(dot.find("1:3") != std::string::npos);
  }
}
