#include "bankit/causality.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bankit/core.hpp"
#include "bankit/error.hpp"

namespace bankit {

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::root: return "root";
    case StepKind::caused: return "caused";
    case StepKind::undefined: return "undefined";
  }
  return "?";
}

std::vector<std::size_t> TauForest::chain(std::size_t t) const {
  std::vector<std::size_t> out{t};
  while (tau[out.back()]) out.push_back(*tau[out.back()]);
  return out;
}

std::vector<std::size_t> TauForest::branch(std::size_t t) const {
  auto c = chain(t);
  std::reverse(c.begin(), c.end());
  return c;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::string step_label(const Trajectory& traj, std::size_t t) {
  return std::to_string(t) + ":" + std::to_string(traj.moves[t] + 1);
}

}  // namespace

bool TauForest::strongly_acyclic() const {
  UnionFind uf(size());
  for (std::size_t t = 0; t < size(); ++t) {
    if (tau[t] && !uf.unite(*tau[t], t)) return false;
  }
  return true;
}

TauForest tau_forest(const Ban& ban, const Trajectory& traj) {
  validate_trajectory(ban, traj);
  const auto configs = traj.configs();
  const std::size_t T = traj.length();
  std::vector<AutomatonSet> unstable(T + 1);
  for (std::size_t s = 0; s <= T; ++s) unstable[s] = unstable_set(ban, configs[s]);

  TauForest f;
  f.kind.resize(T);
  f.tau.resize(T);
  for (std::size_t t = 0; t < T; ++t) {
    const Automaton i = traj.moves[t];
    std::optional<std::size_t> last_stable;
    for (std::size_t s = t; s-- > 0;) {
      if (!unstable[s].contains(i)) {
        last_stable = s;
        break;
      }
    }
    const std::size_t from = last_stable ? *last_stable + 1 : 0;
    bool moved_between = false;
    for (std::size_t s = from; s < t; ++s) moved_between |= traj.moves[s] == i;
    if (moved_between) {
      f.kind[t] = StepKind::undefined;
      f.undefined.push_back(t);
    } else if (last_stable) {
      f.kind[t] = StepKind::caused;
      f.tau[t] = *last_stable;
    } else {
      f.kind[t] = StepKind::root;
      f.roots.push_back(t);
    }
  }

  UnionFind uf(T);
  for (std::size_t t = 0; t < T; ++t) {
    if (f.tau[t]) uf.unite(*f.tau[t], t);
  }
  f.tree.assign(T, 0);
  std::vector<std::size_t> id(T, T);
  for (std::size_t t = 0; t < T; ++t) {
    const std::size_t r = uf.find(t);
    if (id[r] == T) id[r] = f.tree_count++;
    f.tree[t] = id[r];
  }
  return f;
}

SignedDigraph g_tau(const Ban& ban, const Trajectory& traj,
                    const TauForest& forest) {
  SignedDigraph g(ban.size());
  for (std::size_t t = 0; t < forest.size(); ++t) {
    if (!forest.tau[t]) continue;
    const Automaton j = traj.moves[*forest.tau[t]];
    const Automaton i = traj.moves[t];
    const ArcSign s = ban.arc_sign(j, i);
    // An arc missing from G would break the subgraph property; keep it
    // visible as `both` so that checks can see it.
    g.set_arc(j, i, s == ArcSign::absent ? ArcSign::both : s);
  }
  return g;
}

SignedDigraph g_tau(const Ban& ban, const Trajectory& traj) {
  return g_tau(ban, traj, tau_forest(ban, traj));
}

std::vector<std::size_t> kappa(const Ban& ban, const Trajectory& traj,
                               std::size_t t1) {
  if (t1 >= traj.length()) {
    throw Error(ErrorCode::index_out_of_range, "time step out of range");
  }
  const auto configs = traj.configs();
  const Configuration& x = configs[t1];
  const Automaton i = traj.moves[t1];
  std::vector<std::size_t> out;
  if (ban.eval(i, x) == x[i]) return out;
  std::uint64_t moved_later = 0;
  for (std::size_t t = t1; t-- > 0;) {
    const Automaton j = traj.moves[t];
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (!(moved_later & bit)) {
      const Configuration undone = x.flipped(j);
      if (ban.eval(i, undone) == undone[i]) out.push_back(t);
    }
    moved_later |= bit;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> cause_union(const Ban& ban, const Trajectory& traj,
                                     std::size_t t) {
  auto out = kappa(ban, traj, t);
  const TauForest f = tau_forest(ban, traj);
  if (f.tau[t] && !std::binary_search(out.begin(), out.end(), *f.tau[t])) {
    out.insert(std::lower_bound(out.begin(), out.end(), *f.tau[t]), *f.tau[t]);
  }
  return out;
}

CheckReport verify_causality(const Ban& ban, const Trajectory& traj) {
  CheckReport report;
  Check& tau_sign = report.add("tau_sign");
  Check& branch_walk = report.add("branch_walk");
  Check& branch_reversal = report.add("branch_reversal");
  Check& tree_reversal = report.add("tree_reversal");
  Check& repeated_move = report.add("repeated_move");
  Check& acyclic = report.add("anti_graph");
  Check& root_bound = report.add("root_bound");
  Check& subgraph = report.add("g_tau_subgraph");

  const TauForest f = tau_forest(ban, traj);
  const auto configs = traj.configs();
  const SignedDigraph g = interaction_graph(ban);
  const Classification cls = classify(ban);
  const std::size_t T = traj.length();
  auto move_sign = [&](std::size_t t) { return nabla(configs[t], traj.moves[t]); };
  auto sign_star = [&](Automaton j, Automaton i) {
    return cls.monotone ? path_sign_star(g, j, i) : PathSign::none;
  };

  acyclic.expect(f.strongly_acyclic(), "the anti-graph of tau has a cycle");
  if (T > 0) {
    const std::size_t u0 = unstable_set(ban, configs[0]).size();
    root_bound.expect(f.roots.size() <= u0,
                      std::to_string(f.roots.size()) + " root steps but |U(x(0))| = " +
                          std::to_string(u0));
  }

  const SignedDigraph gt = g_tau(ban, traj, f);
  for (const SignedArc& a : gt.arcs()) {
    subgraph.expect(g.has_arc(a.from, a.to),
                    "arc (" + std::to_string(a.from + 1) + "," +
                        std::to_string(a.to + 1) + ") of G_tau is not in G");
  }

  // Cause pairs and the branches ending at every step.
  for (std::size_t t2 = 0; t2 < T; ++t2) {
    const Automaton i = traj.moves[t2];
    if (f.tau[t2]) {
      const std::size_t t1 = *f.tau[t2];
      const Automaton j = traj.moves[t1];
      const int s = local_sign(ban, configs[t1], j, i);
      const int a = move_sign(t1) * nabla(configs[t1], i);
      const int b = move_sign(t1) * move_sign(t2);
      tau_sign.expect(s == a && s == b,
                "tau(" + std::to_string(t2) + ") = " + std::to_string(t1) +
                    ": sign(x(t1), j, i) = " + std::to_string(s) +
                    ", move product = " + std::to_string(b));
    }

    const auto chain = f.chain(t2);
    for (std::size_t q = 1; q < chain.size(); ++q) {
      const std::size_t t1 = chain[q];
      const Automaton j = traj.moves[t1];
      const int sign = cls.monotone ? move_sign(t1) * move_sign(t2) : 0;
      const bool walk = has_walk(g, j, i, q, sign);
      std::string why;
      if (!walk) {
        why = "no walk of length " + std::to_string(q) + " from " +
              std::to_string(j + 1) + " to " + std::to_string(i + 1) +
              (sign != 0 ? " with sign " + std::to_string(sign) : "") +
              " for steps " + std::to_string(t1) + ".." + std::to_string(t2);
      } else if (j == i) {
        const auto comps = strongly_connected_components(g);
        const auto& comp = *std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
          return std::binary_search(c.begin(), c.end(), i);
        });
        for (std::size_t p = 0; p <= q; ++p) {
          const Automaton k = traj.moves[chain[p]];
          if (!std::binary_search(comp.begin(), comp.end(), k)) {
            why = "automaton " + std::to_string(k + 1) +
                  " moves on a cycle of " + std::to_string(i + 1) +
                  " but is not strongly connected to it";
            break;
          }
        }
      }
      branch_walk.expect(why.empty(), why);

      if (j != i) continue;
      if (move_sign(t1) != move_sign(t2)) {
        // Up and down along one branch.
        const PathSign loop = sign_star(i, i);
        const bool negative_cycle =
            loop == PathSign::negative || loop == PathSign::contradictory;
        branch_reversal.expect(!cls.nice && (!cls.monotone || negative_cycle),
                  "automaton " + std::to_string(i + 1) +
                      " moves up and down on the branch " + std::to_string(t1) +
                      ".." + std::to_string(t2) + " of a network that is " +
                      (cls.nice ? "nice" : "monotone without a negative cycle"));
      } else if (cls.nice) {
        repeated_move.expect(f.tree_count >= 2 && sign_star(i, i) == PathSign::positive,
                  "automaton " + std::to_string(i + 1) +
                      " repeats its move on the branch " + std::to_string(t1) +
                      ".." + std::to_string(t2) + " with " +
                      std::to_string(f.tree_count) + " tree(s)");
      }
    }
  }

  // Up and down within one tree.
  std::vector<std::size_t> tree_root(f.tree_count, T);
  for (std::size_t t = 0; t < T; ++t) tree_root[f.tree[t]] = std::min(tree_root[f.tree[t]], t);
  for (std::size_t t1 = 0; t1 < T; ++t1) {
    for (std::size_t t2 = t1 + 1; t2 < T; ++t2) {
      if (f.tree[t1] != f.tree[t2] || traj.moves[t1] != traj.moves[t2]) continue;
      if (move_sign(t1) == move_sign(t2)) continue;
      const Automaton i = traj.moves[t1];
      const Automaton r = traj.moves[tree_root[f.tree[t1]]];
      bool explained = !cls.nice;
      if (explained && cls.monotone) {
        const PathSign ps = sign_star(r, i);
        const bool root_move = tree_root[f.tree[t1]] == t1;
        explained = ps == PathSign::contradictory ||
                    (r == i && root_move && ps == PathSign::negative);
      }
      tree_reversal.expect(explained, "automaton " + std::to_string(i + 1) +
                               " moves up at one step and down at another of the tree rooted at " +
                               std::to_string(tree_root[f.tree[t1]]));
    }
  }
  return report;
}

std::string anti_graph_dot(const TauForest& forest, const Trajectory& traj) {
  std::ostringstream out;
  out << "digraph tau {\n";
  for (std::size_t t = 0; t < forest.size(); ++t) {
    out << "  t" << t << " [label=\"" << step_label(traj, t) << "\"";
    if (forest.kind[t] == StepKind::root) out << ", shape=box";
    if (forest.kind[t] == StepKind::undefined) out << ", style=dashed";
    out << "];\n";
  }
  for (std::size_t t = 0; t < forest.size(); ++t) {
    if (forest.tau[t]) out << "  t" << *forest.tau[t] << " -> t" << t << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bankit
