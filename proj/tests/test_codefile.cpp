#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "divtower/catalog.hpp"
#include "divtower/codefile.hpp"
#include "divtower/css_code.hpp"

using namespace divtower;

namespace {

const char* kSteaneText =
    "n=7\n"
    "nu=2\n"
    "t= 3 3 3 3 3 3 3\n"
    "L:\n"
    "1111111\n"
    "S:\n"
    "1010101\n"
    "0110011\n"
    "0001111\n";

}  // namespace

TEST_CASE("parse and serialize round-trip canonically") {
  const CodeFile file = parse_codefile(kSteaneText);
  CHECK(file.n == 7);
  CHECK(file.nu == 2);
  REQUIRE(file.t.has_value());
  CHECK(file.t->size() == 7);
  CHECK(file.logical.rows() == 1);
  CHECK(file.stab.rows() == 3);
  CHECK(serialize_codefile(file) == kSteaneText);
  CHECK(serialize_codefile(parse_codefile(serialize_codefile(file))) == serialize_codefile(file));
}

TEST_CASE("round trips survive extra blank lines") {
  const std::string spaced =
      "\nn=7\n\nnu=2\nt= 3 3 3 3 3 3 3\n\nL:\n1111111\nS:\n1010101\n0110011\n0001111\n\n";
  CHECK(serialize_codefile(parse_codefile(spaced)) == kSteaneText);
}

TEST_CASE("catalog pairs round-trip through the format") {
  for (const OrthoPair& pair : {steane(), hcode(2), hcode(4)}) {
    const CodeFile file = to_codefile(pair);
    const CodeFile back = parse_codefile(serialize_codefile(file));
    const OrthoPair again = to_pair(back);
    CHECK(again.logical == pair.logical);
    CHECK(again.stab == pair.stab);
    CHECK(again.coeff.t == pair.coeff.t);
    CHECK(again.coeff.nu == pair.coeff.nu);
    CHECK(verify_pair(again).all_pass);
  }
}

TEST_CASE("a coefficient vector is optional in the file but not for code use") {
  const CodeFile file = parse_codefile(
      "n=2\nnu=2\nL:\n10\nS:\n");
  CHECK_FALSE(file.t.has_value());
  CHECK_THROWS_AS(to_pair(file), std::invalid_argument);
}

TEST_CASE("parse errors carry one-based line numbers") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_codefile(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };

  CHECK(line_of("nu=2\nn=x\n") == 2);
  CHECK(line_of("n=7\nnu=2\nt= 1 2 1 1 1 1 1\nL:\n") == 3);   // even entry
  CHECK(line_of("n=3\nnu=2\nL:\n10\nS:\n") == 4);             // short row
  CHECK(line_of("n=3\nnu=2\nL:\n1012\nS:\n") == 4);           // foreign character
  CHECK(line_of("n=3\nnu=2\nL:\n111\nL:\n") == 5);            // duplicate section
  CHECK(line_of("n=3\nnu=2\nS:\n111\n") == 3);                // stabilizers before logicals
  CHECK(line_of("n=3\nnu=1\nL:\n111\nS:\n") == 2);            // level out of range
  CHECK(line_of("n=3\nnu=2\nt= 1 1\nL:\n111\nS:\n") > 0);     // t length mismatch
  CHECK(line_of("n=3\nnu=2\nL:\n111\n") > 0);                 // missing S:
}

TEST_CASE("parse errors name the offending even entry") {
  try {
    parse_codefile("n=3\nnu=2\nt= 1 4 1\nL:\n111\nS:\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("entry 2") != std::string::npos);
    CHECK(msg.find("even") != std::string::npos);
  }
}

TEST_CASE("text matrices parse rows until a blank line") {
  const BitMatrix m = parse_matrix_text("110\n011\n\nignored\n");
  CHECK(m == BitMatrix::from_strings({"110", "011"}));
  CHECK(parse_matrix_text("").rows() == 0);
  CHECK_THROWS_AS(parse_matrix_text("10\n1\n"), ParseError);
}
