#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "symgen/word.hpp"

using namespace symgen;

namespace {

const std::vector<std::string> kGens{"x", "y", "t"};

FlatWord w(const char *text) { return flatten(parse_word(text, kGens)); }

} // namespace

TEST_SUITE("word") {
  TEST_CASE("conjugation and commutator expand as b^-1 a b and a^-1 b^-1 a b") {
    CHECK(w("x^y") == w("y^-1*x*y"));
    CHECK(w("[x,y]") == w("x^-1*y^-1*x*y"));
    CHECK(w("t^(x^2)") == w("x^-2*t*x^2"));
    CHECK(w("x^-1") == FlatWord::generator(0, true));
  }

  TEST_CASE("free reduction") {
    CHECK(w("x*x^-1").empty());
    CHECK(w("x*y*y^-1*x").size() == 2);
    CHECK(w("(x*y)^3").size() == 6);
    CHECK(w("(x*y)^-2") == w("y^-1*x^-1*y^-1*x^-1"));
    CHECK(w("y^-1*x*y").cyclically_reduced() == w("x"));
  }

  TEST_CASE("every relator of the shipped file parses") {
    const char *rels[] = {"x^7", "y^2", "(x*y)^3", "[x,y]^4", "t^2", "[t^(x^2), y*x^-1]", "[t, y]",
                          "(y*t^(x^2))^5", "(x*y*x^2*t^x)^5", "(x*t)^8", "t*t^(x^6*y*x)"};
    for (const char *r : rels)
      CHECK_NOTHROW(parse_word(r, kGens));
  }

  TEST_CASE("parse errors carry a column") {
    CHECK_THROWS_AS(parse_word("x*", kGens), WordParseError);
    CHECK_THROWS_AS(parse_word("x^0", kGens), WordParseError);
    CHECK_THROWS_AS(parse_word("[x,y", kGens), WordParseError);
    CHECK_THROWS_AS(parse_word("", kGens), WordParseError);
    try {
      parse_word("x*z", kGens);
      FAIL("no throw");
    } catch (const WordParseError &e) {
      CHECK(e.position() == 2);
    }
  }

  TEST_CASE("printing and parsing round-trip on random expressions") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 500; ++k) {
      WordExpr e = oracle::random_expr(rng, 4, kGens.size());
      std::string s = to_string(e, kGens);
      WordExpr back = parse_word(s, kGens);
      CHECK_MESSAGE(back == e, s);
      CHECK(flatten(back) == flatten(e));
    }
  }

  TEST_CASE("evaluate is a homomorphism on random words") {
    std::mt19937_64 rng(99);
    std::vector<Permutation> assignment;
    for (int k = 0; k < 3; ++k)
      assignment.push_back(oracle::random_permutation(10, rng));
    auto random_word = [&] {
      FlatWord out;
      std::size_t n = rng() % 12;
      for (std::size_t k = 0; k < n; ++k)
        out.append(make_letter(rng() % 3, rng() % 2));
      return out;
    };
    for (int k = 0; k < 200; ++k) {
      FlatWord a = random_word(), b = random_word();
      CHECK(evaluate(a * b, assignment) == evaluate(a, assignment) * evaluate(b, assignment));
      CHECK(evaluate(a.inverse(), assignment) == evaluate(a, assignment).inverse());
    }
    CHECK(evaluate(FlatWord{}, assignment).is_identity());
  }
}
