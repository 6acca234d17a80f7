#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bankit/configuration.hpp"

namespace bankit {

/// Boolean expression tree used to write local transition functions.
///
/// Variables are stored 0-based; the textual form writes them x1..xn.
/// Conjunctions and disjunctions always have at least two children. Nested
/// operators of the same kind are kept as written, so "(x1 & x2) & x3" and
/// "x1 & x2 & x3" are different trees with the same semantics.
class BoolExpr {
 public:
  enum class Kind { constant, variable, negation, conjunction, disjunction };

  static BoolExpr constant(bool value);
  static BoolExpr variable(Automaton index);
  static BoolExpr negation(BoolExpr child);
  static BoolExpr conjunction(std::vector<BoolExpr> children);
  static BoolExpr disjunction(std::vector<BoolExpr> children);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool value() const { return value_; }
  [[nodiscard]] Automaton index() const { return index_; }
  [[nodiscard]] const std::vector<BoolExpr>& children() const {
    return children_;
  }

  /// Recursive evaluation; bit i of `bits` is the value of variable i.
  [[nodiscard]] bool evaluate(std::uint64_t bits) const;

  /// Variables occurring in the expression (syntactic support).
  [[nodiscard]] AutomatonSet variables() const;

  /// Replaces every variable by `replace(index)`.
  [[nodiscard]] BoolExpr substitute(
      const std::function<BoolExpr(Automaton)>& replace) const;

  /// Text form that parses back to a structurally identical tree.
  [[nodiscard]] std::string render() const;

  friend bool operator==(const BoolExpr&, const BoolExpr&) = default;

 private:
  BoolExpr() = default;

  Kind kind_ = Kind::constant;
  bool value_ = false;
  Automaton index_ = 0;
  std::vector<BoolExpr> children_;
};

/// Parses an expression over x1..xn. Precedence is ! > & > |; the words
/// NOT, AND, OR are accepted case-insensitively; constants are 0 and 1.
/// Throws SyntaxError, or Error(unknown_variable) for indices outside 1..n.
[[nodiscard]] BoolExpr parse_expr(std::string_view text, std::size_t n);

[[nodiscard]] bool eval_expr(const BoolExpr& e, const Configuration& x);

/// A truth table as a bit-vector of 2^k entries, entry a = value at the
/// assignment whose bit m is the m-th input.
using TruthTable = std::vector<bool>;

/// Canonical sum-of-minterms expression for `table` over `inputs`; a
/// constant when the table is constant. Used by generators.
[[nodiscard]] BoolExpr expr_from_table(const TruthTable& table,
                                       const std::vector<Automaton>& inputs);

}  // namespace bankit
