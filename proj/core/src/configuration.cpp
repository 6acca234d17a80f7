#include "bankit/configuration.hpp"

#include "bankit/error.hpp"

namespace bankit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_variable: return "UnknownVariable";
    case ErrorCode::duplicate_automaton: return "DuplicateAutomaton";
    case ErrorCode::missing_automaton: return "MissingAutomaton";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::bad_character: return "BadCharacter";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::non_monotone_arc: return "NonMonotoneArc";
    case ErrorCode::non_monotone_graph: return "NonMonotoneGraph";
    case ErrorCode::constant_function_present: return "ConstantFunctionPresent";
    case ErrorCode::not_nice: return "NotNice";
    case ErrorCode::not_strongly_connected: return "NotStronglyConnected";
    case ErrorCode::cyclic_beyond_loops: return "CyclicBeyondLoops";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::unreachable: return "Unreachable";
    case ErrorCode::invalid_trajectory: return "InvalidTrajectory";
    case ErrorCode::not_recurrent_destination: return "NotRecurrentDestination";
    case ErrorCode::shape_not_recognized: return "ShapeNotRecognized";
  }
  return "Unknown";
}

std::vector<Automaton> AutomatonSet::members() const {
  std::vector<Automaton> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<Automaton>(std::countr_zero(m)));
  }
  return out;
}

std::string AutomatonSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Automaton i : members()) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  s += '}';
  return s;
}

Configuration::Configuration(std::size_t n, std::uint64_t bits)
    : bits_(bits), n_(static_cast<std::uint32_t>(n)) {
  if (n > kMaxAutomata) {
    throw Error(ErrorCode::too_large,
                "configurations are limited to " +
                    std::to_string(kMaxAutomata) + " automata");
  }
  if (n < 64) bits_ &= (std::uint64_t{1} << n) - 1;
}

Configuration Configuration::with(Automaton i, bool value) const {
  const std::uint64_t bit = std::uint64_t{1} << i;
  return Configuration(n_, value ? (bits_ | bit) : (bits_ & ~bit), raw_tag{});
}

std::string Configuration::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

bool lex_less(const Configuration& a, const Configuration& b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return !a[static_cast<Automaton>(std::countr_zero(diff))];
}

Configuration parse_config(std::string_view text, std::size_t n) {
  if (text.size() != n) {
    throw Error(ErrorCode::length_mismatch,
                "configuration '" + std::string(text) + "' has " +
                    std::to_string(text.size()) + " characters, expected " +
                    std::to_string(n));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (c != '0') {
      throw Error(ErrorCode::bad_character,
                  "configuration character " + std::to_string(i + 1) +
                      " is '" + std::string(1, c) + "', expected 0 or 1");
    }
  }
  return Configuration(n, bits);
}

AutomatonSet hd(const Configuration& x, const Configuration& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::length_mismatch,
                "HD of configurations of different lengths");
  }
  return AutomatonSet(x.bits() ^ y.bits());
}

namespace {
void check_index(const Configuration& x, Automaton i) {
  if (i >= x.size()) {
    throw Error(ErrorCode::index_out_of_range,
                "automaton " + std::to_string(i + 1) + " out of range 1.." +
                    std::to_string(x.size()));
  }
}
}  // namespace

int nabla(const Configuration& x, Automaton i) {
  check_index(x, i);
  return x[i] ? -1 : 1;
}

Configuration flip(const Configuration& x, Automaton i) {
  check_index(x, i);
  return x.flipped(i);
}

}  // namespace bankit
