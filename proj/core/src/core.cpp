#include "bankit/core.hpp"

#include "bankit/error.hpp"

namespace bankit {

namespace {

void check_sizes(const Ban& ban, const Configuration& x) {
  if (ban.size() != x.size()) {
    throw Error(ErrorCode::length_mismatch,
                "configuration has " + std::to_string(x.size()) +
                    " automata, network has " + std::to_string(ban.size()));
  }
}

void check_automaton(const Ban& ban, Automaton i) {
  if (i >= ban.size()) {
    throw Error(ErrorCode::index_out_of_range,
                "automaton " + std::to_string(i + 1) + " out of range 1.." +
                    std::to_string(ban.size()));
  }
}

// Full configuration with the inputs of f set from assignment a, others 0.
Configuration lift(const LocalFunction& f, std::size_t n, std::size_t a) {
  std::uint64_t bits = 0;
  for (std::size_t m = 0; m < f.arity(); ++m) {
    if ((a >> m) & 1U) bits |= std::uint64_t{1} << f.inputs()[m];
  }
  return Configuration(n, bits);
}

}  // namespace

AutomatonSet unstable_set(const Ban& ban, const Configuration& x) {
  check_sizes(ban, x);
  AutomatonSet u;
  for (Automaton i = 0; i < ban.size(); ++i) {
    if (ban.eval(i, x) != x[i]) u.insert(i);
  }
  return u;
}

AutomatonSet stable_set(const Ban& ban, const Configuration& x) {
  return AutomatonSet::all(ban.size()) - unstable_set(ban, x);
}

int local_sign(const Ban& ban, const Configuration& x, Automaton j,
               Automaton i) {
  check_sizes(ban, x);
  check_automaton(ban, i);
  check_automaton(ban, j);
  const int before = ban.eval(i, x) ? 1 : 0;
  const int after = ban.eval(i, x.flipped(j)) ? 1 : 0;
  return (after - before) * nabla(x, j);
}

MonotonicityResult is_monotone(const Ban& ban) {
  for (Automaton i = 0; i < ban.size(); ++i) {
    const LocalFunction& f = ban.function(i);
    for (std::size_t m = 0; m < f.arity(); ++m) {
      const Automaton j = f.inputs()[m];
      if (ban.arc_sign(j, i) != ArcSign::both) continue;
      const std::size_t bit = std::size_t{1} << m;
      std::optional<Configuration> up;
      std::optional<Configuration> down;
      for (std::size_t a = 0; a < f.table().size(); ++a) {
        if (a & bit) continue;
        const bool lo = f.table()[a];
        const bool hi = f.table()[a | bit];
        if (hi && !lo && !up) up = lift(f, ban.size(), a);
        if (!hi && lo && !down) down = lift(f, ban.size(), a);
      }
      return {false, MonotonicityWitness{*up, *down, j, i}};
    }
  }
  return {};
}

bool neighbour_input(const Ban& ban, const Configuration& x, Automaton j,
                     Automaton i) {
  check_sizes(ban, x);
  const ArcSign s = ban.arc_sign(j, i);
  switch (s) {
    case ArcSign::absent:
    case ArcSign::positive:
      return x[j];
    case ArcSign::negative:
      return !x[j];
    case ArcSign::both:
      break;
  }
  throw Error(ErrorCode::non_monotone_arc,
              "arc (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                  ") has both signs");
}

Configuration straight_inputs(const Ban& ban, const Configuration& x,
                              Automaton i) {
  Configuration u(ban.size());
  for (Automaton j = 0; j < ban.size(); ++j) {
    u = u.with(j, neighbour_input(ban, x, j, i));
  }
  return u;
}

LocalFunction straight_function(const Ban& ban, Automaton i) {
  check_automaton(ban, i);
  for (Automaton j : ban.function(i).inputs()) {
    if (ban.arc_sign(j, i) == ArcSign::both) {
      throw Error(ErrorCode::non_monotone_arc,
                  "f_" + std::to_string(i + 1) + " is not monotone in x" +
                      std::to_string(j + 1));
    }
  }
  return LocalFunction(ban.function(i).expr().substitute([&](Automaton j) {
    const BoolExpr v = BoolExpr::variable(j);
    return ban.arc_sign(j, i) == ArcSign::negative ? BoolExpr::negation(v) : v;
  }));
}

Ban flip_transform(const Ban& ban, AutomatonSet flipped) {
  if (!(flipped - AutomatonSet::all(ban.size())).empty()) {
    throw Error(ErrorCode::index_out_of_range,
                "flip set names automata outside the network");
  }
  std::vector<BoolExpr> exprs;
  exprs.reserve(ban.size());
  for (Automaton j = 0; j < ban.size(); ++j) {
    BoolExpr e = ban.function(j).expr().substitute([&](Automaton k) {
      const BoolExpr v = BoolExpr::variable(k);
      return flipped.contains(k) ? BoolExpr::negation(v) : v;
    });
    exprs.push_back(flipped.contains(j) ? BoolExpr::negation(std::move(e))
                                        : std::move(e));
  }
  return Ban(std::move(exprs));
}

Configuration SourceElimination::rewrite_initial(const Configuration& x) const {
  Configuration out(ban.size());
  for (Automaton k = 0; k < x.size(); ++k) out = out.with(mirror[k], x[k]);
  for (const auto& [i, value] : constants) out = out.with(i, value);
  return out;
}

Configuration SourceElimination::project(const Configuration& x_new) const {
  Configuration out(mirror.size());
  for (Automaton k = 0; k < mirror.size(); ++k) {
    out = out.with(k, x_new[mirror[k]]);
  }
  return out;
}

SourceElimination eliminate_real_sources(const Ban& ban) {
  const std::size_t n = ban.size();
  std::vector<Automaton> mirror(n);
  std::vector<std::pair<Automaton, bool>> constants;
  std::size_t next = n;
  for (Automaton i = 0; i < n; ++i) {
    const LocalFunction& f = ban.function(i);
    if (f.is_constant()) {
      constants.emplace_back(i, f.table().front());
      mirror[i] = next++;
    } else {
      mirror[i] = i;
    }
  }
  if (constants.empty()) {
    return SourceElimination{ban, std::move(mirror), {}};
  }

  std::vector<BoolExpr> exprs(next, BoolExpr::constant(false));
  for (Automaton i = 0; i < n; ++i) {
    if (ban.function(i).is_constant()) {
      exprs[i] = BoolExpr::variable(i);
      exprs[mirror[i]] = BoolExpr::variable(i);
    } else {
      exprs[i] = ban.function(i).expr().substitute(
          [&](Automaton k) { return BoolExpr::variable(mirror[k]); });
    }
  }
  return SourceElimination{Ban(std::move(exprs)), std::move(mirror),
                           std::move(constants)};
}

AutomatonSet source_automata(const Ban& ban) {
  AutomatonSet sources;
  for (Automaton i = 0; i < ban.size(); ++i) {
    if (ban.function(i).is_constant()) {
      throw Error(ErrorCode::constant_function_present,
                  "f_" + std::to_string(i + 1) +
                      " is constant; eliminate real sources first");
    }
    if (ban.in_neighbours(i) == AutomatonSet::single(i) &&
        ban.arc_sign(i, i) == ArcSign::positive) {
      sources.insert(i);
    }
  }
  return sources;
}

}  // namespace bankit
