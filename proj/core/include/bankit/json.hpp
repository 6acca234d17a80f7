#pragma once

#include <nlohmann/json.hpp>

#include "bankit/ban.hpp"
#include "bankit/causality.hpp"
#include "bankit/dynamics.hpp"
#include "bankit/graph.hpp"
#include "bankit/potential.hpp"
#include "bankit/report.hpp"
#include "bankit/schedule.hpp"

// JSON views of library results. Automata are 1-based, configurations are
// bitstrings, time steps are 0-based.
namespace bankit {

using nlohmann::json;

[[nodiscard]] json to_json(const AutomatonSet& s);
[[nodiscard]] json to_json(const Trajectory& t);
[[nodiscard]] json to_json(const Streamline& s, const Ban& ban);
[[nodiscard]] json to_json(const SignedDigraph& g);
[[nodiscard]] json to_json(const Classification& c);
[[nodiscard]] json to_json(const CheckReport& r);
[[nodiscard]] json to_json(const AttractorSet& a);
[[nodiscard]] json to_json(const ReversibilityReport& r);
[[nodiscard]] json to_json(const TauForest& f, const Trajectory& t);
[[nodiscard]] json to_json(const CarrierTable& table);
[[nodiscard]] json to_json(const ConjectureResult& r);
[[nodiscard]] json to_json(const ScheduleReport& r);
[[nodiscard]] json to_json(const BoundsReport& r);

/// Reads back the {x0, moves} part of a trajectory.
[[nodiscard]] Trajectory trajectory_from_json(const json& j);

}  // namespace bankit
