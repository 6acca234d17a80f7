#pragma once

#include <initializer_list>
#include <string>

#include "bankit/ban.hpp"
#include "bankit/configuration.hpp"
#include "bankit/dynamics.hpp"

namespace bankit::test {

inline const char* const kExample1 =
    "1: x4 & x5\n"
    "2: x1 | x2\n"
    "3: (x1 | x2) & x4\n"
    "4: x3\n"
    "5: x1 | x3 | x4\n";

inline const char* const kExample2 =
    "1: x1\n"
    "2: x2\n"
    "3: x1\n"
    "4: (x1 & x3) | x2\n";

// 1-based ids, as written in the examples.
inline AutomatonSet ids(std::initializer_list<Automaton> one_based) {
  AutomatonSet s;
  for (Automaton i : one_based) s.insert(i - 1);
  return s;
}

inline std::vector<Automaton> moves(std::initializer_list<Automaton> one_based) {
  std::vector<Automaton> v;
  for (Automaton i : one_based) v.push_back(i - 1);
  return v;
}

inline Configuration cfg(const std::string& s) { return parse_config(s, s.size()); }

}  // namespace bankit::test
