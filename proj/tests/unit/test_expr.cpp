#include <doctest.h>

#include <random>

#include "bankit/ban.hpp"
#include "bankit/error.hpp"
#include "bankit/expr.hpp"
#include "support.hpp"

using namespace bankit;
using bankit::test::cfg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::syntax_error;
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("precedence: not binds tighter than and, and tighter than or") {
    const BoolExpr e = parse_expr("!x1 | x2 & x3", 3);
    // (!x1) | (x2 & x3)
    CHECK(e.evaluate(0b000));
    CHECK_FALSE(e.evaluate(0b001));
    CHECK(e.evaluate(0b111));
    CHECK_FALSE(e.evaluate(0b011));
  }

  TEST_CASE("keywords and symbols are interchangeable") {
    const BoolExpr a = parse_expr("not x1 and (x2 or X3)", 3);
    const BoolExpr b = parse_expr("!x1 & (x2 | x3)", 3);
    for (std::uint64_t bits = 0; bits < 8; ++bits) CHECK(a.evaluate(bits) == b.evaluate(bits));
  }

  TEST_CASE("constants") {
    CHECK(parse_expr("1", 2).evaluate(0));
    CHECK_FALSE(parse_expr("0 | 0", 2).evaluate(3));
  }

  TEST_CASE("render parses back to the same function") {
    std::mt19937_64 rng(7);
    const char* samples[] = {"x1", "!x2", "x1 & !x2 | x3", "!(x1 | x2) & (x3 | !x1)", "!!x3",
                             "x1 & x2 & x3 | !x1 & !x2"};
    for (const char* s : samples) {
      const BoolExpr e = parse_expr(s, 3);
      const BoolExpr back = parse_expr(e.render(), 3);
      CHECK(back.render() == e.render());
      for (std::uint64_t bits = 0; bits < 8; ++bits) CHECK(back.evaluate(bits) == e.evaluate(bits));
    }
  }

  TEST_CASE("variables") {
    CHECK(parse_expr("x1 & !x3 | x3", 4).variables() == test::ids({1, 3}));
  }

  TEST_CASE("truth table round trip over every 3-input function") {
    const std::vector<Automaton> inputs{0, 2, 3};
    for (unsigned f = 0; f < 256; ++f) {
      TruthTable t(8);
      for (unsigned a = 0; a < 8; ++a) t[a] = (f >> a) & 1U;
      const BoolExpr e = expr_from_table(t, inputs);
      for (unsigned a = 0; a < 8; ++a) {
        const std::uint64_t bits = (a & 1U) | ((a >> 1 & 1U) << 2) | ((a >> 2 & 1U) << 3);
        CHECK(e.evaluate(bits) == t[a]);
      }
    }
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      (void)parse_expr("x1 & & x2", 2);
      FAIL("accepted");
    } catch (const SyntaxError& e) {
      CHECK(e.position() == 5);
    }
    CHECK(code_of([] { (void)parse_expr("(x1 | x2", 2); }) == ErrorCode::syntax_error);
    CHECK(code_of([] { (void)parse_expr("", 2); }) == ErrorCode::syntax_error);
    CHECK(code_of([] { (void)parse_expr("x1 x2", 2); }) == ErrorCode::syntax_error);
    CHECK(code_of([] { (void)parse_expr("y1", 2); }) == ErrorCode::syntax_error);
  }

  TEST_CASE("unknown variables") {
    CHECK(code_of([] { (void)parse_expr("x3", 2); }) == ErrorCode::unknown_variable);
    CHECK(code_of([] { (void)parse_expr("x0", 2); }) == ErrorCode::unknown_variable);
  }

  TEST_CASE(".ban files") {
    const BanSource src = read_ban_source("# comment\n#@init 01\n2: x1\n\n1: !x2  # trailing\n");
    CHECK(src.n == 2);
    REQUIRE(src.initial);
    CHECK(*src.initial == "01");
    const Ban ban = compile(src);
    CHECK(ban.eval(0, cfg("00")));
    CHECK_FALSE(ban.eval(1, cfg("00")));
    CHECK(code_of([] { (void)parse_ban("1: x1\n1: x1\n"); }) == ErrorCode::duplicate_automaton);
    CHECK(code_of([] { (void)parse_ban("1: x1\n3: x1\n"); }) == ErrorCode::missing_automaton);
  }

  TEST_CASE("to_text round trip") {
    const Ban ban = parse_ban(test::kExample1);
    const Ban back = parse_ban(ban.to_text());
    REQUIRE(back.size() == ban.size());
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
      for (Automaton i = 0; i < 5; ++i) CHECK(back.eval(i, bits) == ban.eval(i, bits));
    }
  }

  TEST_CASE("configurations") {
    const Configuration x = cfg("10110");
    CHECK(x[0]);
    CHECK_FALSE(x[1]);
    CHECK(x.to_string() == "10110");
    CHECK(code_of([] { (void)parse_config("101", 4); }) == ErrorCode::length_mismatch);
    CHECK(code_of([] { (void)parse_config("1a1", 3); }) == ErrorCode::bad_character);
    CHECK(hd(cfg("10110"), cfg("01000")) == test::ids({1, 2, 3, 4}));
  }
}
