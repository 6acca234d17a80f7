#include "bankit/json.hpp"

#include "bankit/error.hpp"

namespace bankit {

namespace {

json ids(const std::vector<Automaton>& v) {
  json out = json::array();
  for (Automaton i : v) out.push_back(i + 1);
  return out;
}

json configs_json(const std::vector<Configuration>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

json optional_step(const std::optional<std::size_t>& s) {
  return s ? json(*s) : json(nullptr);
}

}  // namespace

json to_json(const AutomatonSet& s) { return ids(s.members()); }

json to_json(const Trajectory& t) {
  return {{"x0", t.x0.to_string()}, {"moves", ids(t.moves)}, {"configs", configs_json(t.configs())}};
}

json to_json(const Streamline& s, const Ban& ban) {
  return {{"x0", s.x0.to_string()},
          {"updates", ids(s.updates)},
          {"configs", configs_json(s.configs(ban))}};
}

json to_json(const SignedDigraph& g) {
  json arcs = json::array();
  for (const SignedArc& a : g.arcs()) {
    arcs.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"sign", std::string(to_string(a.sign))}});
  }
  return {{"n", g.size()}, {"arcs", arcs}};
}

json to_json(const Classification& c) {
  return {{"monotone", c.monotone},
          {"nice", c.nice},
          {"totally_positive", c.totally_positive},
          {"witness", c.witness}};
}

json to_json(const CheckReport& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    json item = {{"name", c.name},
                 {"status", std::string(to_string(c.status))},
                 {"instances", c.instances}};
    if (!c.witness.empty()) item["witness"] = c.witness;
    checks.push_back(item);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

json to_json(const AttractorSet& a) {
  json list = json::array();
  for (const Attractor& at : a.attractors) {
    json members = json::array();
    for (std::uint64_t m : at.members) members.push_back(Configuration(a.n, m).to_string());
    list.push_back({{"kind", std::string(to_string(at.kind))}, {"size", at.size()}, {"members", members}});
  }
  return {{"count", a.attractors.size()}, {"stable", a.stable_count()}, {"attractors", list}};
}

json to_json(const ReversibilityReport& r) {
  return {{"distance", r.distance},
          {"hamming", r.hamming},
          {"long", r.is_long},
          {"requires_reversibility", r.all_shortest_long},
          {"shortest_count", r.shortest_count},
          {"truncated", r.truncated},
          {"shortest", to_json(r.shortest)}};
}

json to_json(const TauForest& f, const Trajectory& t) {
  json steps = json::array();
  for (std::size_t s = 0; s < f.size(); ++s) {
    steps.push_back({{"t", s},
                     {"automaton", t.moves[s] + 1},
                     {"kind", std::string(to_string(f.kind[s]))},
                     {"tau", optional_step(f.tau[s])},
                     {"tree", f.tree[s]}});
  }
  return {{"steps", steps},
          {"roots", f.roots},
          {"undefined", f.undefined},
          {"trees", f.tree_count},
          {"strongly_acyclic", f.strongly_acyclic()}};
}

json to_json(const CarrierTable& table) {
  json rows = json::array();
  for (Automaton j = 0; j < table.n; ++j) {
    json sets = json::array();
    for (const AutomatonSet& s : table.sets[j]) sets.push_back(to_json(s));
    rows.push_back({{"potential", Potential{0, j}.to_string()},
                    {"carriers", sets},
                    {"lost_at", optional_step(table.loss_time(j))}});
  }
  return {{"steps", table.steps()}, {"originals", rows}, {"survivors", to_json(table.survivors())}};
}

json to_json(const ConjectureResult& r) {
  json out = {{"verdict", std::string(to_string(r.verdict))},
              {"examined", r.examined},
              {"truncated", r.truncated},
              {"distance", r.distance}};
  out["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return out;
}

json to_json(const ScheduleReport& r) {
  json log = json::array();
  for (const RetargetEvent& e : r.retarget_log) {
    log.push_back({{"step", e.step}, {"from", e.from.to_string()}, {"to", e.to.to_string()}});
  }
  json stable = json::array();
  for (const auto& c : r.stable_configurations) stable.push_back(c.to_string());
  json out = {{"scheduler", r.scheduler},
              {"status", std::string(to_string(r.status))},
              {"hypothesis_ok", r.hypothesis_ok},
              {"reasons", r.reasons},
              {"bound", r.bound},
              {"achieved", r.achieved},
              {"retarget_log", log}};
  out["trajectory"] = r.trajectory ? to_json(*r.trajectory) : json(nullptr);
  out["target"] = r.target ? json(r.target->to_string()) : json(nullptr);
  out["bfs_distance"] = optional_step(r.bfs_distance);
  if (!r.finding.empty()) out["finding"] = r.finding;
  if (!stable.empty()) out["stable_configurations"] = stable;
  return out;
}

json to_json(const BoundsReport& r) {
  return {{"shape", std::string(to_string(r.shape))},
          {"n", r.n},
          {"max_pair_distance", r.max_pair_distance},
          {"max_attractor_distance", r.max_attractor_distance},
          {"max_recurrent_distance", r.max_recurrent_distance},
          {"stable_attractors", r.stable_attractors},
          {"cyclic_attractors", r.cyclic_attractors},
          {"checks", to_json(r.checks)}};
}

Trajectory trajectory_from_json(const json& j) {
  const std::string x0 = j.at("x0").get<std::string>();
  Trajectory t{parse_config(x0, x0.size()), {}};
  for (const auto& m : j.at("moves")) {
    const auto id = m.get<std::size_t>();
    if (id == 0 || id > x0.size()) {
      throw Error(ErrorCode::index_out_of_range, "move " + std::to_string(id) + " out of range");
    }
    t.moves.push_back(id - 1);
  }
  return t;
}

}  // namespace bankit
