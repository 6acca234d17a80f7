#include "bankit/ban.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "bankit/error.hpp"

namespace bankit {

std::string_view to_string(ArcSign s) {
  switch (s) {
    case ArcSign::absent: return "0";
    case ArcSign::positive: return "+";
    case ArcSign::negative: return "-";
    case ArcSign::both: return "+-";
  }
  return "?";
}

LocalFunction::LocalFunction(BoolExpr expr) : expr_(std::move(expr)) {
  inputs_ = expr_.variables().members();
  if (inputs_.size() > kMaxArity) {
    throw Error(ErrorCode::too_large,
                "local function has " + std::to_string(inputs_.size()) +
                    " inputs; the limit is " + std::to_string(kMaxArity));
  }
  const std::size_t rows = std::size_t{1} << inputs_.size();
  table_.resize(rows);
  for (std::size_t a = 0; a < rows; ++a) {
    std::uint64_t bits = 0;
    for (std::size_t m = 0; m < inputs_.size(); ++m) {
      if ((a >> m) & 1U) bits |= std::uint64_t{1} << inputs_[m];
    }
    table_[a] = expr_.evaluate(bits);
  }
}

bool LocalFunction::is_constant() const {
  return std::all_of(table_.begin(), table_.end(),
                     [&](bool v) { return v == table_.front(); });
}

Ban::Ban(std::vector<BoolExpr> functions) {
  const std::size_t n = functions.size();
  if (n == 0 || n > kMaxAutomata) {
    throw Error(ErrorCode::too_large,
                "networks must have 1.." + std::to_string(kMaxAutomata) +
                    " automata");
  }
  functions_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const AutomatonSet vars = functions[i].variables();
    if (!(vars - AutomatonSet::all(n)).empty()) {
      throw Error(ErrorCode::unknown_variable,
                  "f_" + std::to_string(i + 1) +
                      " refers to an automaton beyond " + std::to_string(n));
    }
    functions_.emplace_back(std::move(functions[i]));
  }

  signs_.assign(n, std::vector<ArcSign>(n, ArcSign::absent));
  in_.assign(n, AutomatonSet{});
  out_.assign(n, AutomatonSet{});
  for (std::size_t i = 0; i < n; ++i) {
    const LocalFunction& f = functions_[i];
    const TruthTable& t = f.table();
    for (std::size_t m = 0; m < f.arity(); ++m) {
      const std::size_t bit = std::size_t{1} << m;
      bool up = false;
      bool down = false;
      for (std::size_t a = 0; a < t.size(); ++a) {
        if (a & bit) continue;
        // Local sign is f(x with x_j = 1) - f(x with x_j = 0), seen from
        // either end of the flip.
        if (t[a | bit] && !t[a]) up = true;
        if (!t[a | bit] && t[a]) down = true;
      }
      const Automaton j = f.inputs()[m];
      ArcSign s = ArcSign::absent;
      if (up && down) {
        s = ArcSign::both;
      } else if (up) {
        s = ArcSign::positive;
      } else if (down) {
        s = ArcSign::negative;
      }
      signs_[i][j] = s;
      if (s != ArcSign::absent) {
        in_[i].insert(j);
        out_[j].insert(i);
      }
    }
  }
}

ArcSign Ban::arc_sign(Automaton j, Automaton i) const {
  if (i >= size() || j >= size()) {
    throw Error(ErrorCode::index_out_of_range, "arc endpoint out of range");
  }
  return signs_[i][j];
}

std::string Ban::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    out += std::to_string(i + 1) + ": " + functions_[i].expr().render() + "\n";
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

BanSource read_ban_source(std::string_view text) {
  std::map<std::size_t, std::string> lines;
  BanSource source;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t line_start = offset;
    offset = end + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string_view comment = line.substr(hash);
      if (comment.starts_with("#@init")) {
        source.initial = std::string(trim(comment.substr(6)));
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw SyntaxError(line_start,
                        "line " + std::to_string(line_no) +
                            ": expected '<id>: <expression>'");
    }
    const std::string_view id_text = trim(line.substr(0, colon));
    std::size_t id = 0;
    const auto [ptr, ec] = std::from_chars(
        id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc{} || ptr != id_text.data() + id_text.size() ||
        id == 0) {
      throw SyntaxError(line_start, "line " + std::to_string(line_no) +
                                        ": bad automaton id '" +
                                        std::string(id_text) + "'");
    }
    if (id > kMaxAutomata) {
      throw Error(ErrorCode::too_large,
                  "automaton id " + std::to_string(id) + " exceeds " +
                      std::to_string(kMaxAutomata));
    }
    if (lines.contains(id)) {
      throw Error(ErrorCode::duplicate_automaton,
                  "automaton " + std::to_string(id) + " defined twice (line " +
                      std::to_string(line_no) + ")");
    }
    lines.emplace(id, std::string(trim(line.substr(colon + 1))));
  }
  if (lines.empty()) {
    throw Error(ErrorCode::missing_automaton, "no automata defined");
  }
  source.n = lines.rbegin()->first;
  for (std::size_t k = 1; k <= source.n; ++k) {
    auto it = lines.find(k);
    if (it == lines.end()) {
      throw Error(ErrorCode::missing_automaton,
                  "automaton " + std::to_string(k) + " has no function");
    }
    source.expressions.push_back(it->second);
  }
  return source;
}

Ban compile(const BanSource& source) {
  std::vector<BoolExpr> exprs;
  exprs.reserve(source.n);
  for (const auto& text : source.expressions) {
    exprs.push_back(parse_expr(text, source.n));
  }
  return Ban(std::move(exprs));
}

Ban parse_ban(std::string_view text) { return compile(read_ban_source(text)); }

}  // namespace bankit
