#include "doctest.h"

#include "symgen/m22.hpp"
#include "symgen/presentation.hpp"

using namespace symgen;

TEST_SUITE("presentation") {
  TEST_CASE("the shipped file matches the embedded copy") {
    auto file = load_presentation(std::string(SYMGEN_DATA_DIR) + "/m22.pres");
    const auto &embedded = m22::presentation_file();
    CHECK(file.presentation.generators == embedded.presentation.generators);
    CHECK(file.presentation.relators == embedded.presentation.relators);
    CHECK(file.relator_sources == embedded.relator_sources);
    CHECK(file.presentation.relators.size() == 10);
    CHECK(file.presentation.subgroup("M").size() == 3);
    REQUIRE(file.progenitor.has_value());
    CHECK(file.progenitor->degree == 14);
    CHECK(file.progenitor->base_point == 7);
    CHECK(file.actions.size() == 2);
  }

  TEST_CASE("relators print and parse back") {
    const auto &file = m22::presentation_file();
    for (std::size_t k = 0; k < file.relator_exprs.size(); ++k) {
      std::string s = to_string(file.relator_exprs[k], file.presentation.generators);
      CHECK(parse_word(s, file.presentation.generators) == file.relator_exprs[k]);
    }
  }

  TEST_CASE("split_words keeps bracketed words together") {
    auto parts = split_words("M x y t*t^(x^6 * y*x) [x, y]");
    REQUIRE(parts.size() == 5);
    CHECK(parts[3] == "t*t^(x^6 * y*x)");
    CHECK(parts[4] == "[x, y]");
  }

  TEST_CASE("bad files are rejected with a line number") {
    CHECK_THROWS_AS(parse_presentation("rel x^2\n"), PresentationError);
    CHECK_THROWS_AS(parse_presentation("gens a b\nrel a*c\n"), PresentationError);
    CHECK_THROWS_AS(parse_presentation("gens a a\n"), PresentationError);
    CHECK_THROWS_AS(parse_presentation("gens a\nfrobnicate\n"), PresentationError);
    CHECK_THROWS_AS(parse_presentation("gens a\nprogenitor 3 4 a\n"), PresentationError);
    CHECK_THROWS_AS(parse_presentation("gens a\nsub H a\nsub H a\n"), PresentationError);
    CHECK_THROWS_AS(load_presentation("/nonexistent/file.pres"), PresentationError);
    try {
      parse_presentation("gens a b\n\nrel (a*b\n");
      FAIL("no throw");
    } catch (const PresentationError &e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("comments and blank lines") {
    auto f = parse_presentation("# S3\ngroup S3\ngens a b  # two\n\nrel a^2\nrel b^3\nrel (a*b)^2\nsub A a\n");
    CHECK(f.presentation.name == "S3");
    CHECK(f.presentation.relators.size() == 3);
    CHECK(f.presentation.generator_index("b") == 1);
    CHECK(f.presentation.has_subgroup("A"));
    CHECK_FALSE(f.presentation.has_subgroup("B"));
  }
}
