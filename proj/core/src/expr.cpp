#include "bankit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "bankit/error.hpp"

namespace bankit {

BoolExpr BoolExpr::constant(bool value) {
  BoolExpr e;
  e.kind_ = Kind::constant;
  e.value_ = value;
  return e;
}

BoolExpr BoolExpr::variable(Automaton index) {
  BoolExpr e;
  e.kind_ = Kind::variable;
  e.index_ = index;
  return e;
}

BoolExpr BoolExpr::negation(BoolExpr child) {
  BoolExpr e;
  e.kind_ = Kind::negation;
  e.children_.push_back(std::move(child));
  return e;
}

BoolExpr BoolExpr::conjunction(std::vector<BoolExpr> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("conjunction needs at least two operands");
  }
  BoolExpr e;
  e.kind_ = Kind::conjunction;
  e.children_ = std::move(children);
  return e;
}

BoolExpr BoolExpr::disjunction(std::vector<BoolExpr> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("disjunction needs at least two operands");
  }
  BoolExpr e;
  e.kind_ = Kind::disjunction;
  e.children_ = std::move(children);
  return e;
}

bool BoolExpr::evaluate(std::uint64_t bits) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::variable:
      return (bits >> index_) & 1U;
    case Kind::negation:
      return !children_.front().evaluate(bits);
    case Kind::conjunction:
      for (const auto& c : children_) {
        if (!c.evaluate(bits)) return false;
      }
      return true;
    case Kind::disjunction:
      for (const auto& c : children_) {
        if (c.evaluate(bits)) return true;
      }
      return false;
  }
  return false;
}

AutomatonSet BoolExpr::variables() const {
  if (kind_ == Kind::variable) return AutomatonSet::single(index_);
  AutomatonSet s;
  for (const auto& c : children_) s |= c.variables();
  return s;
}

BoolExpr BoolExpr::substitute(
    const std::function<BoolExpr(Automaton)>& replace) const {
  switch (kind_) {
    case Kind::constant:
      return *this;
    case Kind::variable:
      return replace(index_);
    default:
      break;
  }
  BoolExpr e = *this;
  for (auto& c : e.children_) c = c.substitute(replace);
  return e;
}

std::string BoolExpr::render() const {
  switch (kind_) {
    case Kind::constant:
      return value_ ? "1" : "0";
    case Kind::variable:
      return "x" + std::to_string(index_ + 1);
    case Kind::negation: {
      const BoolExpr& c = children_.front();
      const bool wrap =
          c.kind_ == Kind::conjunction || c.kind_ == Kind::disjunction;
      return wrap ? "!(" + c.render() + ")" : "!" + c.render();
    }
    case Kind::conjunction:
    case Kind::disjunction:
      break;
  }
  const bool is_and = kind_ == Kind::conjunction;
  std::string out;
  for (std::size_t k = 0; k < children_.size(); ++k) {
    if (k > 0) out += is_and ? " & " : " | ";
    const BoolExpr& c = children_[k];
    // A conjunction operand of a disjunction binds tighter and needs no
    // parentheses; everything else n-ary is wrapped to keep the tree shape.
    const bool wrap = c.kind_ == Kind::disjunction ||
                      (c.kind_ == Kind::conjunction && is_and);
    out += wrap ? "(" + c.render() + ")" : c.render();
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  BoolExpr parse() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    BoolExpr e = parse_or();
    skip_space();
    if (pos_ != text_.size()) {
      throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) +
                                  "'");
    }
    return e;
  }

 private:
  BoolExpr parse_or() {
    std::vector<BoolExpr> operands;
    operands.push_back(parse_and());
    while (accept_operator('|', "or")) operands.push_back(parse_and());
    if (operands.size() == 1) return std::move(operands.front());
    return BoolExpr::disjunction(std::move(operands));
  }

  BoolExpr parse_and() {
    std::vector<BoolExpr> operands;
    operands.push_back(parse_factor());
    while (accept_operator('&', "and")) operands.push_back(parse_factor());
    if (operands.size() == 1) return std::move(operands.front());
    return BoolExpr::conjunction(std::move(operands));
  }

  BoolExpr parse_factor() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end");
    if (accept_operator('!', "not")) return BoolExpr::negation(parse_factor());
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BoolExpr inner = parse_or();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') {
        throw SyntaxError(pos_, "expected ')'");
      }
      ++pos_;
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(
                                     text_[pos_]))) {
        throw SyntaxError(pos_, "constants are 0 or 1");
      }
      return BoolExpr::constant(c == '1');
    }
    if (c == 'x' || c == 'X') {
      const std::size_t start = pos_;
      ++pos_;
      std::size_t digits_start = pos_;
      std::size_t value = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        if (value > 1'000'000) throw SyntaxError(start, "variable index too large");
        ++pos_;
      }
      if (pos_ == digits_start) throw SyntaxError(pos_, "expected digits after 'x'");
      if (pos_ < text_.size() &&
          std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        throw SyntaxError(pos_, "unexpected letter in variable name");
      }
      if (value == 0 || value > n_) {
        throw Error(ErrorCode::unknown_variable,
                    "unknown variable x" + std::to_string(value) + " at " +
                        std::to_string(start) + " (network has " +
                        std::to_string(n_) + " automata)");
      }
      return BoolExpr::variable(value - 1);
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  // Accepts either the symbol or the case-insensitive keyword (which must not
  // run into further identifier characters).
  bool accept_operator(char symbol, std::string_view word) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == symbol) {
      ++pos_;
      return true;
    }
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t k = 0; k < word.size(); ++k) {
      const char ch = static_cast<char>(
          std::tolower(static_cast<unsigned char>(text_[pos_ + k])));
      if (ch != word[k]) return false;
    }
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) ||
         text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolExpr parse_expr(std::string_view text, std::size_t n) {
  return Parser(text, n).parse();
}

bool eval_expr(const BoolExpr& e, const Configuration& x) {
  return e.evaluate(x.bits());
}

BoolExpr expr_from_table(const TruthTable& table,
                         const std::vector<Automaton>& inputs) {
  const auto ones = std::count(table.begin(), table.end(), true);
  if (ones == 0) return BoolExpr::constant(false);
  if (static_cast<std::size_t>(ones) == table.size()) return BoolExpr::constant(true);
  std::vector<BoolExpr> minterms;
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (!table[a]) continue;
    std::vector<BoolExpr> literals;
    for (std::size_t m = 0; m < inputs.size(); ++m) {
      BoolExpr v = BoolExpr::variable(inputs[m]);
      literals.push_back(((a >> m) & 1U) ? v : BoolExpr::negation(v));
    }
    if (literals.size() == 1) {
      minterms.push_back(std::move(literals.front()));
    } else {
      minterms.push_back(BoolExpr::conjunction(std::move(literals)));
    }
  }
  if (minterms.size() == 1) return std::move(minterms.front());
  return BoolExpr::disjunction(std::move(minterms));
}

}  // namespace bankit
