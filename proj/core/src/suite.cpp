#include "bankit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "bankit/causality.hpp"
#include "bankit/core.hpp"
#include "bankit/error.hpp"
#include "bankit/generate.hpp"
#include "bankit/graph.hpp"
#include "bankit/json.hpp"
#include "bankit/potential.hpp"
#include "bankit/schedule.hpp"

namespace bankit {

void Tally::add(const Check& c) {
  instances += c.instances;
  switch (c.status) {
    case CheckStatus::verified: ++verified; break;
    case CheckStatus::violated: ++violated; break;
    case CheckStatus::not_applicable: ++not_applicable; break;
  }
}

json to_json(const Witness& w) {
  json out = {{"suite", w.suite},      {"check", w.check}, {"detail", w.detail},
              {"seed", w.seed},        {"instance", w.instance}, {"ban", w.ban}};
  out["x"] = w.x ? json(w.x->to_string()) : json(nullptr);
  out["trajectory"] = w.trajectory ? to_json(*w.trajectory) : json(nullptr);
  if (!w.extra.is_null()) out["extra"] = w.extra;
  return out;
}

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [&](const auto& kv) {
    return kv.second.violated == 0 ||
           std::find(informative.begin(), informative.end(), kv.first) != informative.end();
  });
}

std::size_t SuiteResult::violations(const std::string& check) const {
  auto it = checks.find(check);
  return it == checks.end() ? 0 : it->second.violated;
}

void SuiteResult::record(const CheckReport& report, const Witness& context) {
  for (const Check& c : report.checks) {
    Tally& t = checks[c.name];
    t.add(c);
    if (c.status == CheckStatus::violated && t.violated <= witness_limit) {
      Witness w = context;
      w.check = c.name;
      w.detail = c.witness;
      witnesses.push_back(std::move(w));
    }
  }
}

void SuiteResult::record(const std::string& check, bool ok, const Witness& context) {
  Check c{check, CheckStatus::not_applicable, 0, {}};
  c.expect(ok, context.detail);
  CheckReport one;
  one.checks.push_back(std::move(c));
  record(one, context);
}

json to_json(const SuiteResult& r) {
  json checks = json::object();
  for (const auto& [name, t] : r.checks) {
    checks[name] = {{"verified", t.verified},
                    {"violated", t.violated},
                    {"not_applicable", t.not_applicable},
                    {"instances", t.instances}};
  }
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return {{"suite", r.name},       {"seed", r.seed},
          {"instances", r.instances}, {"ok", r.ok()},
          {"checks", checks},      {"counters", r.counters},
          {"informative", r.informative}, {"witnesses", witnesses},
          {"seconds", r.seconds}};
}

std::vector<std::filesystem::path> persist_witnesses(const SuiteResult& r,
                                                     const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  // One network can yield several witnesses of the same check (one per
  // initial configuration), so repeats get a running suffix.
  std::map<std::string, std::size_t> seen;
  for (const Witness& w : r.witnesses) {
    std::string stem = w.suite + "-" + std::to_string(w.instance) + "-" + w.check;
    if (const std::size_t k = seen[stem]++; k > 0) stem += "-" + std::to_string(k);
    const auto path = dir / (stem + ".json");
    std::ofstream out(path);
    out << to_json(w).dump(2) << '\n';
    written.push_back(path);
  }
  return written;
}

namespace {

using Clock = std::chrono::steady_clock;

Rng instance_rng(std::uint64_t seed, std::size_t k) {
  return Rng(seed ^ ((k + 1) * 0x9E3779B97F4A7C15ULL));
}

Witness context(const std::string& suite, std::uint64_t seed, std::size_t k, const Ban& ban) {
  Witness w;
  w.suite = suite;
  w.seed = seed;
  w.instance = k;
  w.ban = ban.to_text();
  return w;
}

void finish(SuiteResult& r, Clock::time_point start, const SuiteOptions& opts) {
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (opts.bundle_dir && !r.witnesses.empty()) persist_witnesses(r, *opts.bundle_dir);
}

std::size_t pick_n(Rng& rng, std::size_t max_n) {
  const std::size_t top = std::max<std::size_t>(max_n, 2);
  return 2 + below(rng, top - 1);
}

// Attractors of g reachable from x, by index.
std::vector<std::size_t> reachable_attractors(const AttractorSet& atts,
                                              const std::vector<std::uint32_t>& dist) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < atts.attractors.size(); ++a) {
    const auto& m = atts.attractors[a].members;
    if (std::any_of(m.begin(), m.end(), [&](std::uint64_t y) { return dist[y] != kUnreachable; })) {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

SuiteResult run_property_suite(const SuiteOptions& opts) {
  const auto start = Clock::now();
  SuiteResult r;
  r.name = "properties";
  r.seed = opts.seed;
  r.informative = {"favourable_conditions_unstable"};
  for (std::size_t k = 0; k < opts.instances; ++k) {
    Rng rng = instance_rng(opts.seed, k);
    const std::size_t n = pick_n(rng, opts.max_n);
    const Ban ban = [&] {
      switch (k % 4) {
        case 1: return random_nice_ban(n, rng);
        case 2: return random_nice_ban(n, rng, true);
        case 3: return random_acyclic_ban(n, rng);
        default: return random_monotone_ban(n, rng);
      }
    }();
    ++r.instances;
    Witness ctx = context(r.name, opts.seed, k, ban);
    const Configuration x = random_configuration(n, rng);
    ctx.x = x;

    const Trajectory walk = random_trajectory(ban, x, 1 + below(rng, opts.max_length), rng);
    ctx.trajectory = walk;
    r.record(verify_causality(ban, walk), ctx);
    r.record(verify_potentials(ban, walk, {false}), ctx);

    const TransitionGraph g(ban);
    const AttractorSet atts = attractors(g);
    const auto dist = distances_from(g, x.bits());
    const auto reach = reachable_attractors(atts, dist);
    const Attractor& a = atts.attractors[reach[below(rng, reach.size())]];
    std::vector<Trajectory> shortest{shortest_to_attractor(g, x, a)};
    std::vector<std::uint64_t> reachable;
    for (std::uint64_t y = 0; y < dist.size(); ++y) {
      if (dist[y] != kUnreachable) reachable.push_back(y);
    }
    const Configuration y(n, reachable[below(rng, reachable.size())]);
    shortest.push_back(*shortest_trajectory(g, x, y));
    for (const Trajectory& t : shortest) {
      ctx.trajectory = t;
      r.record(verify_causality(ban, t), ctx);
      r.record(verify_potentials(ban, t, {true}), ctx);
    }

    // The favourable-conditions predicate for every target and automaton.
    ctx.trajectory.reset();
    CheckReport fav;
    Check& c = fav.add("favourable_conditions");
    // The same conditions with i still in state not y_i: a positive loop on i
    // then holds i back, so this form is informative.
    Check& before = fav.add("favourable_conditions_unstable");
    for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << n); ++yb) {
      const Configuration target(n, yb);
      for (Automaton i = 0; i < n; ++i) {
        const FavourableConditions fc = favourable_conditions(ban, target, i);
        if (!fc.applicable) continue;
        const std::string where =
            "automaton " + std::to_string(i + 1) + " with target " + target.to_string() + " at ";
        const std::string z = fc.counterexample ? fc.counterexample->to_string() : "";
        c.expect(fc.reaches_target, where + z);
        if (fc.reaches_target) before.expect(fc.unstable_before_move, where + z);
      }
    }
    r.record(fav, ctx);
  }
  finish(r, start, opts);
  return r;
}

SuiteResult run_hamiltonian_suite(const SuiteOptions& opts) {
  const auto start = Clock::now();
  SuiteResult r;
  r.name = "hamiltonian";
  r.seed = opts.seed;
  auto check = [&](const Ban& ban, std::size_t k) {
    ++r.instances;
    ++r.counters["networks_n" + std::to_string(ban.size())];
    const TransitionGraph g(ban);
    const std::size_t n = ban.size();
    const std::uint64_t N = std::uint64_t{1} << n;
    Witness ctx = context(r.name, opts.seed, k, ban);
    bool any = false;
    for (std::uint64_t xb = 0; xb < N; ++xb) {
      const auto dist = distances_from(g, xb);
      if (std::find(dist.begin(), dist.end(), N - 1) == dist.end()) continue;
      any = true;
      const Configuration x(n, xb);
      ctx.x = x;
      ctx.detail = "Hamiltonian shortest trajectory from " + x.to_string();
      r.record("hamiltonian_not_nice", !classify(ban).nice, ctx);
      r.record("single_unstable_start", unstable_set(ban, x).size() == 1, ctx);
    }
    if (any) ++r.counters["hamiltonian_networks"];
    ctx.x.reset();
    ctx.detail = "hamiltonian_shortest disagrees with the distance scan";
    r.record("search_agrees", hamiltonian_shortest(ban).has_value() == any, ctx);
  };
  const auto pairs = all_two_automaton_bans();
  for (std::size_t k = 0; k < pairs.size(); ++k) check(pairs[k], k);
  for (std::size_t k = 0; k < opts.instances; ++k) {
    Rng rng = instance_rng(opts.seed, k);
    MonotoneOptions mo;
    mo.arc_probability = 0.5;
    mo.allow_constants = k % 2 == 1;
    check(random_monotone_ban(3, rng, mo), pairs.size() + k);
  }
  finish(r, start, opts);
  return r;
}

SuiteResult run_bounds_suite(const SuiteOptions& opts, std::size_t min_n, std::size_t max_n) {
  const auto start = Clock::now();
  SuiteResult r;
  r.name = "bounds";
  r.seed = opts.seed;
  // The literal update profile is reported, it does not gate the run.
  r.informative = {"update_profile", "update_profile_from_grounds"};
  std::size_t k = 0;
  for (std::size_t n = min_n; n <= max_n; ++n) {
    for (std::size_t rep = 0; rep < opts.instances; ++rep) {
      for (int kind = 0; kind < 4; ++kind, ++k) {
        Rng rng = instance_rng(opts.seed, k);
        const Ban ban = kind == 0   ? random_path(n, rng)
                        : kind == 1 ? random_cycle(n, rng, true)
                        : kind == 2 ? random_cycle(n, rng, false)
                                    : random_acyclic_ban(n, rng);
        const Shape wanted = kind == 0   ? Shape::path
                             : kind == 1 ? Shape::positive_cycle
                             : kind == 2 ? Shape::negative_cycle
                                         : Shape::acyclic;
        ++r.instances;
        Witness ctx = context(r.name, opts.seed, k, ban);
        const BoundsReport b = bounds_suite(ban);
        ctx.detail = "detected " + std::string(to_string(b.shape));
        r.record("shape_detected",
                 b.shape == wanted || (wanted == Shape::acyclic && b.shape == Shape::path), ctx);
        r.record(b.checks, ctx);
        const std::string key = std::string(to_string(b.shape)) + "_max_attractor_distance";
        r.counters[key] = std::max(r.counters[key], b.max_attractor_distance);
        const std::string pair_key = std::string(to_string(b.shape)) + "_max_pair_distance";
        r.counters[pair_key] = std::max(r.counters[pair_key], b.max_pair_distance);
      }
    }
  }
  finish(r, start, opts);
  return r;
}

SuiteResult run_scheduler_suite(const SuiteOptions& opts) {
  const auto start = Clock::now();
  SuiteResult r;
  r.name = "schedulers";
  r.seed = opts.seed;
  for (std::size_t k = 0; k < opts.instances; ++k) {
    Rng rng = instance_rng(opts.seed, k);
    const std::size_t n = pick_n(rng, opts.max_n);
    const Ban ban = [&] {
      switch (k % 6) {
        case 1: return random_nice_ban(n, rng);
        case 2: return random_nice_ban(n, rng, true);
        case 3: return random_acyclic_ban(n, rng);
        case 4: return random_path(n, rng);
        case 5: return random_cycle(n, rng, below(rng, 2) == 0);
        default: return random_monotone_ban(n, rng);
      }
    }();
    ++r.instances;
    const TransitionGraph g(ban);
    const AttractorSet atts = attractors(g);
    const Configuration x = random_configuration(n, rng);
    const auto dist = distances_from(g, x.bits());
    Witness ctx = context(r.name, opts.seed, k, ban);
    ctx.x = x;

    // Independent acceptance of a report whose hypothesis holds.
    auto judge = [&](const ScheduleReport& rep, const std::vector<std::uint64_t>& targets) {
      const std::string& name = rep.scheduler;
      if (!rep.hypothesis_ok) {
        ++r.counters[name + ".rejected"];
        return;
      }
      ++r.counters[name + ".applicable"];
      std::uint32_t best = kUnreachable;
      for (std::uint64_t t : targets) best = std::min(best, dist[t]);
      // Separates a false length claim from a construction that breaks down
      // although a short enough trajectory exists.
      const bool claim_refuted = best != kUnreachable && best > rep.bound;
      std::string why;
      if (rep.status != ScheduleStatus::ok) {
        why = "finding: " + rep.finding + " (BFS distance " + std::to_string(best) + ", bound " +
              std::to_string(rep.bound) + ")";
        ++r.counters[name + (claim_refuted ? ".bound_refuted" : ".construction_broke")];
      } else if (!rep.trajectory) {
        why = "no trajectory";
      } else if (auto bad = check_trajectory(ban, *rep.trajectory)) {
        why = "invalid trajectory: " + *bad;
      } else if (std::find(targets.begin(), targets.end(),
                           rep.trajectory->destination().bits()) == targets.end()) {
        why = "ends at " + rep.trajectory->destination().to_string();
      } else if (rep.achieved != rep.trajectory->length() || rep.achieved > rep.bound) {
        why = "length " + std::to_string(rep.trajectory->length()) + " over the bound " +
              std::to_string(rep.bound);
      } else if (rep.trajectory->length() < best) {
        why = "shorter than BFS";
      }
      ctx.trajectory = rep.trajectory;
      ctx.detail = why;
      ctx.extra = to_json(rep);
      r.record(name, why.empty(), ctx);
      ctx.extra = nullptr;
    };

    std::vector<std::uint64_t> ys;
    for (const Attractor& a : atts.attractors) {
      if (a.kind == AttractorKind::stable && dist[a.members.front()] != kUnreachable) {
        ys.push_back(a.members.front());
      }
    }
    std::vector<std::uint64_t> reachable;
    for (std::uint64_t y = 0; y < dist.size(); ++y) {
      if (dist[y] != kUnreachable) reachable.push_back(y);
    }
    for (int s = 0; s < 3; ++s) ys.push_back(reachable[below(rng, reachable.size())]);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    for (std::uint64_t yb : ys) {
      const Configuration y(n, yb);
      ctx.extra = nullptr;
      judge(schedule_uniform_favour(ban, x, y), {yb});
      judge(schedule_all_positive(ban, x, y, atts.recurrent(yb)), {yb});
      judge(schedule_acyclic_favour(ban, x, y), {yb});
      judge(schedule_to_stable(ban, x, y), {yb});
      judge(schedule_nice_scc(ban, x, y), {yb});
    }
    for (std::size_t a : reachable_attractors(atts, dist)) {
      const ScheduleReport rep = schedule_to_attractor(ban, x, atts.attractors[a]);
      judge(rep, atts.attractors[a].members);
      if (rep.hypothesis_ok && rep.status == ScheduleStatus::ok) {
        for (const RetargetEvent& e : rep.retarget_log) {
          ctx.detail = "retarget to " + e.to.to_string() + " left the recurrent set";
          r.record("retarget_recurrent", atts.recurrent(e.to.bits()), ctx);
        }
        if (!rep.retarget_log.empty()) ++r.counters["to-attractor.retargeted"];
      }
    }
  }
  finish(r, start, opts);
  return r;
}

SuiteResult run_conjecture_suite(const SuiteOptions& opts, std::size_t exhaustive_max_n) {
  const auto start = Clock::now();
  SuiteResult r;
  r.name = "conjecture";
  r.seed = opts.seed;
  // The search has no expected verdict.
  r.informative = {"survivor_only_transmission"};
  // Every counterexample is kept and persisted.
  r.witness_limit = 100'000;
  std::size_t k = 0;
  auto search = [&](const Ban& ban, const Configuration& x, const Attractor& a, std::size_t id) {
    const ConjectureResult res = survivor_only_search(ban, x, a, opts.enumeration_cap);
    ++r.counters[std::string(to_string(res.verdict))];
    if (res.verdict == Verdict::inconclusive) return;
    Witness ctx = context(r.name, opts.seed, id, ban);
    ctx.x = x;
    ctx.trajectory = res.witness;
    ctx.detail = "no shortest trajectory to the attractor of " +
                 Configuration(ban.size(), a.members.front()).to_string() +
                 " transmits only super-survivor potential";
    ctx.extra = to_json(res);
    r.record("survivor_only_transmission", res.verdict == Verdict::holds, ctx);
  };

  for (std::size_t n = 1; n <= exhaustive_max_n; ++n) {
    for_each_acyclic_monotone(n, [&](const Ban& ban) {
      ++r.instances;
      const std::size_t id = k++;
      const TransitionGraph g(ban);
      const AttractorSet atts = attractors(g);
      for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << n); ++xb) {
        const auto dist = distances_from(g, xb);
        for (std::size_t a : reachable_attractors(atts, dist)) {
          search(ban, Configuration(n, xb), atts.attractors[a], id);
        }
      }
    });
  }
  r.counters["exhaustive_networks"] = r.instances;
  for (std::size_t q = 0; q < opts.instances; ++q) {
    Rng rng = instance_rng(opts.seed, q);
    const std::size_t n = pick_n(rng, opts.max_n);
    const Ban ban = q % 2 == 0 ? random_acyclic_ban(n, rng) : random_monotone_ban(n, rng);
    ++r.instances;
    const TransitionGraph g(ban);
    const AttractorSet atts = attractors(g);
    const Configuration x = random_configuration(n, rng);
    const auto reach = reachable_attractors(atts, distances_from(g, x.bits()));
    search(ban, x, atts.attractors[reach[below(rng, reach.size())]], k++);
  }
  finish(r, start, opts);
  return r;
}

SuiteResult run_identity_suite(const SuiteOptions& opts) {
  const auto start = Clock::now();
  SuiteResult r;
  r.name = "identities";
  r.seed = opts.seed;
  std::size_t k = 0;
  for (std::size_t n = 1; n <= opts.max_n; ++n) {
    for (std::size_t rep = 0; rep < opts.instances; ++rep, ++k) {
      Rng rng = instance_rng(opts.seed, k);
      MonotoneOptions mo;
      mo.max_in_degree = 4;
      mo.allow_constants = rep % 2 == 1;
      const Ban ban = random_monotone_ban(n, rng, mo);
      const AutomatonSet flipped(rng() & AutomatonSet::all(n).mask());
      const Ban conj = flip_transform(ban, flipped);
      std::vector<LocalFunction> straight;
      for (Automaton i = 0; i < n; ++i) straight.push_back(straight_function(ban, i));
      ++r.instances;

      CheckReport rep_checks;
      Check& sbbs = rep_checks.add("sb_bs_inverse");
      Check& involution = rep_checks.add("flip_involution");
      Check& instability = rep_checks.add("instability_equivalence");
      Check& cases = rep_checks.add("sign_case_table");
      Check& identity = rep_checks.add("straight_identity");
      Check& nondecreasing = rep_checks.add("straight_nondecreasing");
      Check& implication = rep_checks.add("input_implication");
      Check& conjugacy = rep_checks.add("flip_conjugacy");
      auto at = [](const Configuration& x, Automaton i, const char* what) {
        return std::string(what) + " at " + x.to_string() + ", automaton " + std::to_string(i + 1);
      };

      for (bool b : {false, true}) sbbs.expect(sb(bs(b)) == b && bs(sb(bs(b))) == bs(b), "SB(BS(b))");
      for (Automaton i = 0; i < n; ++i) {
        const TruthTable& t = straight[i].table();
        bool ok = true;
        for (std::size_t a = 0; a < t.size(); ++a) {
          for (std::size_t m = 0; m < straight[i].arity(); ++m) {
            if (!(a >> m & 1U) && t[a] && !t[a | (std::size_t{1} << m)]) ok = false;
          }
        }
        nondecreasing.expect(ok, "g_" + std::to_string(i + 1) + " decreases in some input");
      }

      for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << n); ++xb) {
        const Configuration x(n, xb);
        const AutomatonSet u = unstable_set(ban, x);
        const Configuration fx = x.xored(flipped);
        for (Automaton i = 0; i < n; ++i) {
          const bool fi = ban.eval(i, x);
          sbbs.expect(sb(-nabla(x, i)) == x[i], at(x, i, "SB(-nabla x_i) != x_i"));
          const Configuration xi = flip(x, i);
          involution.expect(flip(xi, i) == x && hd(x, xi).size() == 1, at(x, i, "flip"));
          const int move = static_cast<int>(fi) - static_cast<int>(x[i]);
          instability.expect(u.contains(i) == (move != 0) && (move == 0 || move == nabla(x, i)),
                             at(x, i, "instability"));

          for (Automaton j = 0; j < n; ++j) {
            const Configuration xj = x.flipped(j);
            const bool ux = fi != x[i];
            const bool uxj = ban.eval(i, xj) != xj[i];
            int expected = 0;
            if (j != i) {
              if (ux && !uxj) expected = -nabla(x, i) * nabla(x, j);
              if (!ux && uxj) expected = nabla(x, i) * nabla(x, j);
            } else {
              if (ux && uxj) expected = -1;
              if (!ux && !uxj) expected = 1;
            }
            if (local_sign(ban, x, j, i) == expected) {
              cases.pass();
            } else {
              cases.fail(at(x, i, "sign case table") + " from " + std::to_string(j + 1));
            }
          }

          identity.expect(straight[i](straight_inputs(ban, x, i).bits()) == fi,
                          at(x, i, "g_i(straight inputs) != f_i"));
          const AutomatonSet in = ban.in_neighbours(i);
          if (!in.empty()) {
            bool found = false;
            for (Automaton j : in.members()) found |= neighbour_input(ban, x, j, i) == fi;
            implication.expect(found, at(x, i, "no input carries f_i(x)"));
          }
          conjugacy.expect(step(conj, fx, i) == step(ban, x, i).xored(flipped),
                           at(x, i, "flip transform does not commute with the update"));
        }
      }
      r.record(rep_checks, context(r.name, opts.seed, k, ban));
    }
  }
  finish(r, start, opts);
  return r;
}

}  // namespace bankit
