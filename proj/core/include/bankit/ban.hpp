#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bankit/configuration.hpp"
#include "bankit/expr.hpp"

namespace bankit {

/// Sign label of an arc (j, i) of the interaction graph.
enum class ArcSign : std::int8_t { absent, positive, negative, both };

[[nodiscard]] std::string_view to_string(ArcSign s);

/// +1 / -1 for defined signs, 0 otherwise.
[[nodiscard]] constexpr int sign_value(ArcSign s) {
  return s == ArcSign::positive ? 1 : (s == ArcSign::negative ? -1 : 0);
}

/// A local transition function compiled to a truth table over the variables
/// that occur in its expression.
class LocalFunction {
 public:
  static constexpr std::size_t kMaxArity = 22;

  explicit LocalFunction(BoolExpr expr);

  [[nodiscard]] const BoolExpr& expr() const { return expr_; }
  [[nodiscard]] const std::vector<Automaton>& inputs() const { return inputs_; }
  [[nodiscard]] const TruthTable& table() const { return table_; }
  [[nodiscard]] std::size_t arity() const { return inputs_.size(); }

  /// Index into table() of the assignment that `bits` induces on inputs().
  [[nodiscard]] std::size_t assignment_of(std::uint64_t bits) const {
    std::size_t a = 0;
    for (std::size_t m = 0; m < inputs_.size(); ++m) {
      a |= static_cast<std::size_t>((bits >> inputs_[m]) & 1U) << m;
    }
    return a;
  }

  [[nodiscard]] bool operator()(std::uint64_t bits) const {
    return table_[assignment_of(bits)];
  }
  [[nodiscard]] bool operator()(const Configuration& x) const {
    return (*this)(x.bits());
  }

  /// True when the function ignores all of its inputs.
  [[nodiscard]] bool is_constant() const;

 private:
  BoolExpr expr_;
  std::vector<Automaton> inputs_;
  TruthTable table_;
};

/// A Boolean automata network: one local transition function per automaton.
/// Arc signs are derived semantically at construction, enumerating only the
/// assignments of each function's own inputs.
class Ban {
 public:
  explicit Ban(std::vector<BoolExpr> functions);

  [[nodiscard]] std::size_t size() const { return functions_.size(); }
  [[nodiscard]] const LocalFunction& function(Automaton i) const {
    return functions_[i];
  }
  [[nodiscard]] bool eval(Automaton i, const Configuration& x) const {
    return functions_[i](x.bits());
  }
  [[nodiscard]] bool eval(Automaton i, std::uint64_t bits) const {
    return functions_[i](bits);
  }

  /// Semantic sign of the influence of j on i (absent if none).
  [[nodiscard]] ArcSign arc_sign(Automaton j, Automaton i) const;

  /// V_{->i}: automata with a (semantic) arc into i.
  [[nodiscard]] AutomatonSet in_neighbours(Automaton i) const {
    return in_[i];
  }
  [[nodiscard]] AutomatonSet out_neighbours(Automaton j) const {
    return out_[j];
  }

  /// Text in the .ban format, one "<id>: <expression>" line per automaton.
  [[nodiscard]] std::string to_text() const;

 private:
  std::vector<LocalFunction> functions_;
  // signs_[i][j] for every i, j.
  std::vector<std::vector<ArcSign>> signs_;
  std::vector<AutomatonSet> in_;
  std::vector<AutomatonSet> out_;
};

/// Raw content of a .ban file.
struct BanSource {
  std::size_t n = 0;
  /// Expression text of automaton k at index k - 1.
  std::vector<std::string> expressions;
  /// Optional default initial configuration from a "#@init <bits>" comment.
  std::optional<std::string> initial;
};

/// Reads the line structure of a .ban file ('#' comments, "<id>: <expr>"
/// lines, ids 1..n in any order). Throws on duplicate or missing ids.
[[nodiscard]] BanSource read_ban_source(std::string_view text);

[[nodiscard]] Ban compile(const BanSource& source);

[[nodiscard]] Ban parse_ban(std::string_view text);

}  // namespace bankit
