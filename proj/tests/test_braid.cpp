#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sqp/braid.hpp"
#include "sqp/errors.hpp"

using namespace sqp;

TEST_CASE("band words parse and print") {
    const BandWord alpha = parse_band_word(testing::alpha_text, 8);
    CHECK(alpha.strands() == 8);
    CHECK(alpha.length() == 8);
    CHECK(alpha[7] == Band{4, 7});
    CHECK(to_string(alpha) == testing::alpha_text);
    CHECK(parse_band_word("", 1).empty());
    CHECK(parse_band_word("  b(1,2)\tb(1,2) ", 2).length() == 2);
}

TEST_CASE("malformed band words report the token") {
    CHECK_THROWS_AS(parse_band_word("b(3,2)", 3), ParseError);
    CHECK_THROWS_AS(parse_band_word("b(1,4)", 3), ParseError);
    CHECK_THROWS_AS(parse_band_word("b(0,2)", 3), ParseError);
    CHECK_THROWS_AS(parse_band_word("b(1,2) x", 3), ParseError);
    CHECK_THROWS_AS(parse_band_word("b(1;2)", 3), ParseError);
    try {
        parse_band_word("b(1,2) b(2,2)", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.token_index() == 1);
        CHECK(e.offset() == 7);
    }
    CHECK_THROWS_AS(BandWord(0), InputError);
}

TEST_CASE("Artin words parse and print") {
    const ArtinWord w = parse_artin_word("s1 S2 s1 S2", 3);
    CHECK(w.length() == 4);
    CHECK(w.writhe() == 0);
    CHECK(to_string(w) == "s1 S2 s1 S2");
    CHECK_THROWS_AS(parse_artin_word("s3", 3), ParseError);
    CHECK_THROWS_AS(parse_artin_word("t1", 3), ParseError);
}

TEST_CASE("band expansion") {
    // sigma_{1,3} = s1 s2 s1^-1
    CHECK(to_string(expand_to_artin(BandWord(3, {{1, 3}}))) == "s1 s2 S1");
    CHECK(expand_to_artin(BandWord(2, {{1, 2}})).length() == 1);
    // lengths 2(j - i) - 1 summed over the letters: 9+9+5+5+7+7+5+5
    const ArtinWord a = expand_to_artin(parse_band_word(testing::alpha_text, 8));
    CHECK(a.length() == 52);
    CHECK(a.writhe() == 8);
}

TEST_CASE("permutations") {
    CHECK(underlying_permutation(BandWord(3)).cycle_count() == 3);
    CHECK(underlying_permutation(BandWord(2, {{1, 2}, {1, 2}})).cycle_count() == 2);
    CHECK(underlying_permutation(BandWord(2, {{1, 2}, {1, 2}, {1, 2}})).cycle_count() == 1);
    CHECK(underlying_permutation(parse_band_word(testing::alpha_text, 8)).cycle_count() == 2);
    const auto cycles = Permutation({2, 3, 1, 4}).cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == std::vector<int>{1, 2, 3});
    CHECK(cycles[1] == std::vector<int>{4});
}

TEST_CASE("property: expansion preserves the permutation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const BandWord w = testing::random_band_word(rng, 7, 10);
        CHECK(underlying_permutation(w) == underlying_permutation(expand_to_artin(w)));
    }
}

TEST_CASE("shift") {
    const BandWord w(2, {{1, 2}});
    CHECK(shift(w, 3, 5) == BandWord(5, {{4, 5}}));
    CHECK_THROWS_AS(shift(w, 4, 5), InputError);
}
