#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bankit {

// Automata are addressed 0-based inside the library. Everything that crosses
// the text boundary (parsers, printers, JSON, DOT) uses 1-based ids.
using Automaton = std::size_t;

inline constexpr std::size_t kMaxAutomata = 64;

/// Set of automata stored as a 64-bit mask.
class AutomatonSet {
 public:
  constexpr AutomatonSet() = default;
  constexpr explicit AutomatonSet(std::uint64_t mask) : mask_(mask) {}

  static constexpr AutomatonSet single(Automaton i) {
    return AutomatonSet(std::uint64_t{1} << i);
  }
  static constexpr AutomatonSet all(std::size_t n) {
    return AutomatonSet(n >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
  }

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] constexpr bool contains(Automaton i) const {
    return (mask_ >> i) & 1U;
  }
  [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  constexpr void insert(Automaton i) { mask_ |= std::uint64_t{1} << i; }
  constexpr void erase(Automaton i) { mask_ &= ~(std::uint64_t{1} << i); }

  constexpr AutomatonSet& operator|=(AutomatonSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr AutomatonSet& operator&=(AutomatonSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  friend constexpr AutomatonSet operator|(AutomatonSet a, AutomatonSet b) {
    return AutomatonSet(a.mask_ | b.mask_);
  }
  friend constexpr AutomatonSet operator&(AutomatonSet a, AutomatonSet b) {
    return AutomatonSet(a.mask_ & b.mask_);
  }
  /// Set difference.
  friend constexpr AutomatonSet operator-(AutomatonSet a, AutomatonSet b) {
    return AutomatonSet(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(AutomatonSet, AutomatonSet) = default;

  /// Members in increasing order.
  [[nodiscard]] std::vector<Automaton> members() const;

  /// Renders 1-based, e.g. "{1,3,4}" or "{}".
  [[nodiscard]] std::string to_string() const;

 private:
  std::uint64_t mask_ = 0;
};

/// A configuration x in B^n. Bit i holds the state of automaton i.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t n, std::uint64_t bits = 0);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool operator[](Automaton i) const { return (bits_ >> i) & 1U; }

  [[nodiscard]] Configuration flipped(Automaton i) const {
    return Configuration(n_, bits_ ^ (std::uint64_t{1} << i), raw_tag{});
  }
  [[nodiscard]] Configuration with(Automaton i, bool value) const;
  [[nodiscard]] Configuration xored(AutomatonSet s) const {
    return Configuration(n_, bits_ ^ s.mask(), raw_tag{});
  }

  /// Bitstring, automaton 1 first.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  struct raw_tag {};
  Configuration(std::size_t n, std::uint64_t bits, raw_tag)
      : bits_(bits), n_(static_cast<std::uint32_t>(n)) {}

  std::uint64_t bits_ = 0;
  std::uint32_t n_ = 0;
};

/// Order of the bitstrings (automaton 1 is the most significant character).
[[nodiscard]] bool lex_less(const Configuration& a, const Configuration& b);

/// Parses a bitstring of exactly n characters from {0,1}.
[[nodiscard]] Configuration parse_config(std::string_view text, std::size_t n);

/// HD(x, y): automata whose states differ.
[[nodiscard]] AutomatonSet hd(const Configuration& x, const Configuration& y);

// Moves are signed: the move of i away from x is +1 when x_i = 0 and -1 when
// x_i = 1. sb/bs translate between signs and Boolean values.
[[nodiscard]] constexpr int bs(bool b) { return b ? 1 : -1; }
[[nodiscard]] constexpr bool sb(int s) { return s > 0; }

/// Sign of the move automaton i makes away from x.
[[nodiscard]] int nabla(const Configuration& x, Automaton i);

[[nodiscard]] Configuration flip(const Configuration& x, Automaton i);

}  // namespace bankit
