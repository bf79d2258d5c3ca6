#include "doctest.h"

#include "oracles.hpp"
#include "symgen/permutation.hpp"

using namespace symgen;

namespace {
const char *kX14 = "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)";
}

TEST_SUITE("permutation") {
  TEST_CASE("compose applies the left factor first") {
    Permutation a = Permutation::from_cycles("(1,2)", 3);
    Permutation b = Permutation::from_cycles("(2,3)", 3);
    Permutation ab = compose(a, b);
    // 1 -a-> 2 -b-> 3, 2 -a-> 1, 3 -b-> 2
    CHECK(ab[0] == 2);
    CHECK(ab[1] == 0);
    CHECK(ab[2] == 1);
    CHECK(ab.to_cycles() == "(1,3,2)");
  }

  TEST_CASE("identity and inverse") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
      Permutation p = oracle::random_permutation(9, rng);
      CHECK(compose(p, Permutation::identity(9)) == p);
      CHECK(compose(p, p.inverse()).is_identity());
      CHECK(compose(p.inverse(), p).is_identity());
    }
  }

  TEST_CASE("x has order 7 on 14 points") {
    Permutation x = Permutation::from_cycles(kX14, 14);
    Permutation p = Permutation::identity(14);
    for (int k = 0; k < 7; ++k) {
      CHECK((k == 0) == p.is_identity());
      p = p * x;
    }
    CHECK(p.is_identity());
    CHECK(x.order() == 7);
    CHECK(x.pow(-1) == x.inverse());
  }

  TEST_CASE("cycle notation round-trips") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
      Permutation p = oracle::random_permutation(12, rng);
      CHECK(Permutation::from_cycles(p.to_cycles(), 12) == p);
    }
    CHECK(Permutation::identity(5).to_cycles() == "()");
    CHECK(Permutation::from_cycles(" ( 1 , 3 )( 2,4 ) ", 4) == Permutation::from_cycles("(1,3)(2,4)", 4));
  }

  TEST_CASE("conjugation and commutator conventions") {
    Permutation p = Permutation::from_cycles("(1,2,3)", 4);
    Permutation q = Permutation::from_cycles("(3,4)", 4);
    CHECK(conjugate(p, q) == q.inverse() * p * q);
    CHECK(conjugate(p, q).to_cycles() == "(1,2,4)");
    CHECK(commutator(p, q) == p.inverse() * q.inverse() * p * q);
    CHECK_FALSE(commute(p, q));
    CHECK(commute(p, p.inverse()));
  }

  TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(Permutation::from_cycles("(1,2,2)", 3), PermutationError);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,5)", 3), PermutationError);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,2", 3), PermutationError);
    CHECK_THROWS(Permutation(std::vector<Point>{0, 0, 1}));
    CHECK_THROWS(compose(Permutation::identity(3), Permutation::identity(4)));
  }
}
