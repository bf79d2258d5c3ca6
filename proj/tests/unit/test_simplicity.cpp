#include "doctest.h"

#include "symgen/m22.hpp"
#include "symgen/simplicity.hpp"

using namespace symgen;

namespace {

struct Case {
  Presentation p;
  CosetTable table;
};

Case setup(const char *text, const char *sub) {
  auto p = parse_presentation(text).presentation;
  auto table = enumerate(p, p.subgroup(sub));
  return {std::move(p), std::move(table)};
}

FlatWord w(const Presentation &p, const char *text) { return flatten(parse_word(text, p.generators)); }

} // namespace

TEST_SUITE("simplicity") {
  TEST_CASE("M22 on the cosets of M") {
    auto run = m22::run_dce();
    auto r = m22::run_iwasawa(run);
    CHECK(r.degree == 330);
    CHECK(r.image_order == 443520);
    CHECK(r.stabilizer_order == 1344);
    CHECK(r.order_bound == 443520);
    CHECK(r.faithful);
    CHECK(r.perfect);
    CHECK(r.primitive);
    CHECK(r.k_order == 8);
    CHECK(r.k_abelian);
    CHECK(r.k_in_stabilizer);
    CHECK(r.k_normalized);
    CHECK(r.k_closure_is_whole);
    CHECK(r.verdict == Verdict::Simple);
    // K is elementary abelian: every generator is an involution
    for (const auto &g : r.k_generators)
      CHECK(g.order() == 2);
  }

  TEST_CASE("K given by words over x, y, t") {
    const auto &p = m22::presentation_file().presentation;
    auto table = enumerate(p, p.subgroup("M"));
    const FlatWord k[] = {w(p, "t*t^(x^6*y*x)")};
    auto r = iwasawa_check(table, p, k, 443520);
    CHECK(r.k_order == 2);
    CHECK(r.k_closure_is_whole);
    // a single involution is not normalized by the stabilizer
    CHECK_FALSE(r.k_normalized);
    CHECK(r.verdict == Verdict::Inconclusive);
  }

  TEST_CASE("S3 is not simple") {
    auto c = setup("gens a b\nrel a^2\nrel b^3\nrel (a*b)^2\nsub A a\n", "A");
    const FlatWord k[] = {w(c.p, "b")};
    auto r = iwasawa_check(c.table, c.p, k, 6);
    CHECK(r.image_order == 6);
    CHECK_FALSE(r.perfect);
    CHECK(r.derived_order == 3);
    CHECK(r.verdict == Verdict::NotSimple);
  }

  TEST_CASE("a nontrivial kernel means not simple") {
    auto c = setup("gens a b\nrel a^2\nrel b^3\nrel (a*b)^2\nsub B b\n", "B");
    const FlatWord k[] = {w(c.p, "a")};
    auto r = iwasawa_check(c.table, c.p, k, 6);
    CHECK(r.image_order == 2);
    CHECK_FALSE(r.faithful);
    CHECK(r.verdict == Verdict::NotSimple);
  }

  TEST_CASE("an imprimitive action is inconclusive") {
    auto c = setup("gens a b\nrel a^2\nrel b^3\nrel (a*b)^5\nsub A a\n", "A");
    const FlatWord k[] = {w(c.p, "a")};
    auto r = iwasawa_check(c.table, c.p, k, 60);
    CHECK(r.faithful);
    CHECK(r.perfect);
    CHECK_FALSE(r.primitive);
    CHECK(r.verdict == Verdict::Inconclusive);
  }

  TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::Simple) == "simple");
    CHECK(to_string(Verdict::NotSimple) == "not-simple");
    CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
  }
}
