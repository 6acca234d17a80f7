#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bankit {

enum class ErrorCode {
  syntax_error,
  unknown_variable,
  duplicate_automaton,
  missing_automaton,
  length_mismatch,
  bad_character,
  index_out_of_range,
  non_monotone_arc,
  non_monotone_graph,
  constant_function_present,
  not_nice,
  not_strongly_connected,
  cyclic_beyond_loops,
  too_large,
  unreachable,
  invalid_trajectory,
  not_recurrent_destination,
  shape_not_recognized,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::syntax_error,
              "syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  /// 0-based byte offset into the parsed text.
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bankit
