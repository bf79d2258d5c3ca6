#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "symgen/m22.hpp"
#include "symgen/perm_group.hpp"

using namespace symgen;

namespace {

const Permutation kX = Permutation::from_cycles("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", 14);
const Permutation kY = Permutation::from_cycles("(1,12)(2,3)(4,11)(5,8)(6,13)(9,10)", 14);

PermutationGroup l32() { return PermutationGroup({kX, kY}, 14); }

std::vector<std::size_t> sizes(const std::vector<std::vector<Point>> &parts) {
  std::vector<std::size_t> out;
  for (const auto &p : parts)
    out.push_back(p.size());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_SUITE("perm_group") {
  TEST_CASE("L3(2) on 14 points has order 168, matching the BFS closure") {
    CHECK(l32().order() == 168);
    CHECK(oracle::closure_size({kX, kY}, 14) == 168);
  }

  TEST_CASE("the 22-point model has order 443520") {
    Permutation x = Permutation::from_cycles(m22::kModelX, 22);
    Permutation y = Permutation::from_cycles(m22::kModelY, 22);
    Permutation t = Permutation::from_cycles(m22::kModelT, 22);
    PermutationGroup g({x, y, t}, 22);
    CHECK(g.order() == 443520);
    CHECK(PermutationGroup(g.strong_generators(), 22).order() == 443520);
    std::uint64_t prod = 1;
    for (auto s : g.basic_orbit_sizes())
      prod *= s;
    CHECK(prod == 443520);
    CHECK(is_transitive(g));
  }

  TEST_CASE("trivial group") {
    PermutationGroup g({}, 6);
    CHECK(g.order() == 1);
    CHECK(orbit(g, 3) == std::vector<Point>{3});
    CHECK(g.contains(Permutation::identity(6)));
    CHECK_FALSE(g.contains(Permutation::from_cycles("(1,2)", 6)));
  }

  TEST_CASE("membership") {
    auto g = l32();
    CHECK(g.contains(kY));
    CHECK(g.contains(kX * kY * kX * kX));
    // moves a point (7) outside the orbit of nothing: a transposition is odd, L3(2) is not
    CHECK_FALSE(g.contains(Permutation::from_cycles("(1,2)", 14)));
    std::mt19937_64 rng(3);
    const Permutation gens[] = {kX, kY};
    for (int k = 0; k < 100; ++k) {
      Permutation p = Permutation::identity(14);
      for (int j = 0; j < 3; ++j)
        p = p * gens[rng() % 2];
      CHECK(g.contains(p));
    }
    PermutationGroup intrans({Permutation::from_cycles("(1,2,3)", 6)}, 6);
    CHECK_FALSE(intrans.contains(Permutation::from_cycles("(1,4)", 6)));
    CHECK_THROWS(g.contains(Permutation::identity(13)));
  }

  TEST_CASE("orbits and stabilizers in the 14-point action") {
    auto g = l32();
    CHECK(orbit(g, 6).size() == 14);
    auto st = point_stabilizer(g, 6);
    CHECK(st.order() == 12);
    auto orbs = orbits(st);
    CHECK(sizes(orbs) == std::vector<std::size_t>{1, 1, 12});
    CHECK(orbit(st, 13) == std::vector<Point>{13});
    const Point over[] = {0, 7};
    CHECK(pointwise_stabilizer(g, over).order() == 12);
    const Point apart[] = {0, 1};
    CHECK(pointwise_stabilizer(g, apart).order() == 1);
    CHECK_THROWS(orbit(g, 14));
  }

  TEST_CASE("orbit-stabilizer on every point of several groups") {
    std::vector<PermutationGroup> groups{l32(),
                                         PermutationGroup({Permutation::from_cycles("(1,2,3,4,5)", 5),
                                                           Permutation::from_cycles("(1,2)", 5)},
                                                          5),
                                         PermutationGroup({Permutation::from_cycles("(1,2)(3,4)", 6),
                                                           Permutation::from_cycles("(1,3)(5,6)", 6)},
                                                          6)};
    for (const auto &g : groups)
      for (Point p = 0; p < g.degree(); ++p)
        CHECK(orbit(g, p).size() * point_stabilizer(g, p).order() == g.order());
  }

  TEST_CASE("the 14-point action has only the pairs over Fano points as blocks") {
    auto g = l32();
    CHECK_FALSE(is_primitive(g));
    auto blocks = minimal_blocks(g, 0, 7);
    REQUIRE(blocks.size() == 7);
    for (const auto &b : blocks) {
      REQUIRE(b.size() == 2);
      CHECK(b[1] == b[0] + 7);
    }
    // every nontrivial system is this one
    for (Point b = 1; b < 14; ++b) {
      auto sys = minimal_blocks(g, 0, b);
      CHECK((sys.size() == 7 || sys.size() == 1));
    }
  }

  TEST_CASE("primitivity") {
    PermutationGroup s3({Permutation::from_cycles("(1,2,3)", 3), Permutation::from_cycles("(1,2)", 3)}, 3);
    CHECK(is_primitive(s3));
    PermutationGroup c4({Permutation::from_cycles("(1,2,3,4)", 4)}, 4);
    CHECK_FALSE(is_primitive(c4));
    CHECK(nontrivial_block_system(c4).has_value());
    PermutationGroup intrans({Permutation::from_cycles("(1,2)", 3)}, 3);
    CHECK_THROWS_AS(is_primitive(intrans), GroupError);
  }

  TEST_CASE("derived subgroup and normal closure") {
    PermutationGroup c6({Permutation::from_cycles("(1,2,3,4,5,6)", 6)}, 6);
    CHECK(derived_subgroup(c6).order() == 1);
    PermutationGroup s4({Permutation::from_cycles("(1,2,3,4)", 4), Permutation::from_cycles("(1,2)", 4)}, 4);
    CHECK(derived_subgroup(s4).order() == 12);
    CHECK(derived_subgroup(l32()).order() == 168);
    const Permutation seed[] = {Permutation::from_cycles("(1,2)(3,4)", 4)};
    CHECK(normal_closure(s4, seed).order() == 4);
    CHECK(is_abelian(std::vector<Permutation>{Permutation::from_cycles("(1,2)", 4),
                                              Permutation::from_cycles("(3,4)", 4)}));
  }

  TEST_CASE("centralizers by enumeration") {
    auto g = l32();
    const Permutation none[] = {Permutation::identity(14)};
    CHECK(centralizer_bruteforce(g, none).order() == 168);
    const Permutation xs[] = {kX};
    CHECK(centralizer_bruteforce(g, xs).order() == 7);
    CHECK_THROWS_AS(centralizer_bruteforce(g, xs, 100), GroupError);
  }

  TEST_CASE("setwise stabilization") {
    const Permutation gens[] = {Permutation::from_cycles("(1,2)(3,4)", 4)};
    const Point a[] = {0, 1};
    const Point b[] = {0, 2};
    CHECK(stabilizes_set(gens, a));
    CHECK_FALSE(stabilizes_set(gens, b));
  }
}
