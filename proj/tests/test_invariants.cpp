#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sqp/errors.hpp"
#include "sqp/invariants.hpp"

using namespace sqp;
using testing::poly;

namespace {

const ArtinWord trefoil = parse_artin_word("s1 s1 s1", 2);
const ArtinWord hopf = parse_artin_word("s1 s1", 2);
const ArtinWord figure_eight = parse_artin_word("s1 S2 s1 S2", 3);

LaurentPolynomial jones(const ArtinWord& w) { return std::get<LaurentPolynomial>(jones_tl(w)); }

ArtinWord mirror(const ArtinWord& w) {
    std::vector<Generator> g = w.letters();
    for (auto& x : g) x.sign = -x.sign;
    return ArtinWord(w.strands(), g);
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
    const LaurentPolynomial a = poly({{-1, 1}, {0, 2}});
    const LaurentPolynomial b = poly({{1, 1}, {0, -1}});
    CHECK((a * b) == poly({{-1, -1}, {0, -1}, {1, 2}}));
    CHECK((a - a).is_zero());
    CHECK((a * b).divide_exact(b) == a);
    CHECK_THROWS_AS(a.divide_exact(poly({{0, 2}, {1, 1}, {3, 1}})), std::domain_error);
    CHECK(poly({{3, -2}, {5, 1}}).normalized() == poly({{0, 2}, {2, -1}}));
    CHECK(poly({{-2, 1}, {1, 3}}).evaluate(-1) == -2);
    CHECK(poly({{0, 1}, {1, -1}}).pow(3) == poly({{0, 1}, {1, -3}, {2, 3}, {3, -1}}));
    CHECK(poly({{0, 2}, {1, -5}, {2, 2}}).to_string() == "2t^2 - 5t + 2");
    CHECK(poly({{1, -1}, {5, -1}}).to_string("t", true) == "-t^(5/2) - t^(1/2)");
    CHECK(LaurentPolynomial().to_string() == "0");
    CHECK(associates(poly({{2, -1}, {3, 1}}), poly({{0, 1}, {1, -1}})));
    CHECK(poly({{-1, 1}, {2, 3}}).reciprocal() == poly({{1, 1}, {-2, 3}}));
}

TEST_CASE("pencil determinant: modular, serial and reference agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
        IntMatrix v(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) v(r, c) = std::uniform_int_distribution<int>(-3, 3)(rng);
        const LaurentPolynomial ref = pencil_determinant_reference(v);
        CHECK(pencil_determinant(v, Execution::parallel) == ref);
        CHECK(pencil_determinant(v, Execution::serial) == ref);
    }
    // Singular pencil: a zero row.
    IntMatrix z(3, 3);
    z(0, 1) = 1;
    z(1, 2) = 2;
    CHECK(pencil_determinant(z).is_zero());
    // Large entries force several primes.
    IntMatrix big(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) big(r, c) = static_cast<std::int64_t>((r * 7 + c * 13 + 1) * 1000003);
    CHECK(pencil_determinant(big) == pencil_determinant_reference(big));
}

TEST_CASE("Seifert matrix of standard knots") {
    const SeifertMatrix t = seifert_matrix(trefoil);
    CHECK(t.v.rows() == 2);
    CHECK(alexander(t) == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(signature(t) == -2);

    const SeifertMatrix f = seifert_matrix(figure_eight);
    CHECK(alexander(f) == poly({{0, 1}, {1, -3}, {2, 1}}));
    CHECK(signature(f) == 0);

    CHECK(seifert_matrix(ArtinWord(1)).v.rows() == 0);
    CHECK(alexander(seifert_matrix(ArtinWord(1))) == LaurentPolynomial(1L));
    CHECK(alexander(seifert_matrix(hopf)) == poly({{0, 1}, {1, -1}}));
    CHECK(signature(seifert_matrix(hopf)) == -1);

    const SeifertMatrix split = seifert_matrix(parse_artin_word("s1 s1 s1", 3));
    CHECK_FALSE(split.connected);
    CHECK(alexander(split).is_zero());
}

TEST_CASE("signature handles zero diagonals") {
    IntMatrix h(2, 2);
    h(0, 1) = h(1, 0) = 1;
    CHECK(signature(h) == 0);
    IntMatrix z(3, 3);
    CHECK(signature(z) == 0);
}

TEST_CASE("linking numbers and components") {
    CHECK(linking_matrix(hopf)(0, 1) == 1);
    CHECK(linking_matrix(hopf)(1, 0) == 1);
    CHECK(linking_matrix(ArtinWord(2))(0, 1) == 0);
    const ArtinWord alpha = expand_to_artin(parse_band_word(testing::alpha_text, 8));
    const IntMatrix lk = linking_matrix(alpha);
    REQUIRE(lk.rows() == 2);
    CHECK(lk(0, 1) == 1);

    CHECK(extract_component(hopf, 0) == ArtinWord(1));
    CHECK_THROWS_AS(extract_component(hopf, 2), InputError);
    for (std::size_t c = 0; c < 2; ++c) {
        const ArtinWord k = extract_component(alpha, c);
        const LaurentPolynomial delta = alexander(seifert_matrix(k));
        CHECK(delta == poly({{0, 2}, {1, -5}, {2, 2}}));
        CHECK(abs(delta.evaluate(-1)) == 9);
    }
}

TEST_CASE("slice conditions") {
    const SliceFlags c = slice_necessary(poly({{0, 2}, {1, -5}, {2, 2}}));
    CHECK(c.unit_at_one);
    CHECK(c.square_determinant);
    const SliceFlags t = slice_necessary(poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(t.unit_at_one);
    CHECK_FALSE(t.square_determinant);
    const SliceFlags u = slice_necessary(LaurentPolynomial(1L));
    CHECK(u.unit_at_one);
    CHECK(u.square_determinant);
}

TEST_CASE("Jones polynomial") {
    // Exponents are powers of t^(1/2).
    CHECK(jones(trefoil) == poly({{2, 1}, {6, 1}, {8, -1}}));
    CHECK(jones(hopf) == poly({{1, -1}, {5, -1}}));
    CHECK(jones(ArtinWord(1)) == LaurentPolynomial(1L));
    CHECK(jones(figure_eight) == poly({{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
    CHECK(std::holds_alternative<BudgetExceeded>(jones_tl(ArtinWord(5), 4)));
    CHECK(catalan(12) == 208012);
}

TEST_CASE("property: Seifert route agrees with the Burau oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const ArtinWord w = testing::random_artin_word(rng, 5, 10);
        CHECK_MESSAGE(alexander(seifert_matrix(w)) == burau_alexander_oracle(w), to_string(w));
    }
}

TEST_CASE("property: knot Seifert forms are unimodular and Delta is symmetric") {
    std::mt19937_64 rng(7);
    int knots = 0;
    for (int trial = 0; trial < 300 && knots < 60; ++trial) {
        const ArtinWord w = testing::random_artin_word(rng, 5, 11);
        if (underlying_permutation(w).cycle_count() != 1) continue;
        ++knots;
        const SeifertMatrix s = seifert_matrix(w);
        IntMatrix skew(s.v.rows(), s.v.cols());
        for (std::size_t r = 0; r < s.v.rows(); ++r)
            for (std::size_t c = 0; c < s.v.cols(); ++c) skew(r, c) = s.v(r, c) - s.v(c, r);
        const LaurentPolynomial at_zero = pencil_determinant_reference(skew);  // det(skew - t skew^T) at t=0 is det(skew)
        CHECK(abs(at_zero.coefficient(0)) == 1);
        const LaurentPolynomial delta = alexander(s);
        CHECK(associates(delta, delta.reciprocal()));
        CHECK(abs(delta.evaluate(1)) == 1);
    }
    CHECK(knots >= 20);
}

TEST_CASE("property: signature is a conjugation and stabilisation invariant") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        const ArtinWord w = testing::random_artin_word(rng, 4, 9);
        const int s = signature(seifert_matrix(w));
        std::vector<Generator> rotated(w.letters().begin() + 1, w.letters().end());
        rotated.push_back(w[0]);
        CHECK(signature(seifert_matrix(ArtinWord(w.strands(), rotated))) == s);
        for (int sign : {1, -1}) {
            std::vector<Generator> stab = w.letters();
            stab.push_back({w.strands(), sign});
            CHECK(signature(seifert_matrix(ArtinWord(w.strands() + 1, stab))) == s);
        }
    }
}

TEST_CASE("property: Jones by transfer equals the state sum") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const ArtinWord w = testing::random_artin_word(rng, 5, 8);
        const LaurentPolynomial bf = kauffman_bracket_state_sum(w);
        CHECK(kauffman_bracket(w, Execution::parallel) == bf);
        CHECK(kauffman_bracket(w, Execution::serial) == bf);
        CHECK(kauffman_bracket_reference(w) == bf);
        CHECK(jones(mirror(w)) == jones(w).reciprocal());
    }
}

TEST_CASE("reports") {
    const InvariantReport a = full_report(parse_band_word(testing::alpha_text, 8));
    CHECK(a.components == 2);
    CHECK(a.euler == 0);
    CHECK(a.first_betti == 1);
    CHECK(a.linking(0, 1) == 1);
    for (const auto& delta : a.component_alexander) CHECK(delta == poly({{0, 2}, {1, -5}, {2, 2}}));
    CHECK(a.jones.has_value());

    const InvariantReport u = full_report(BandWord(1));
    CHECK(u.components == 1);
    CHECK(u.alexander == LaurentPolynomial(1L));
    CHECK(u.signature == 0);
    CHECK(u.determinant == 1);
    CHECK(u.jones == LaurentPolynomial(1L));

    ReportOptions small;
    small.jones_budget = 4;
    const InvariantReport s = full_report(parse_band_word(testing::alpha_text, 8), small);
    CHECK_FALSE(s.jones.has_value());
    CHECK(s.jones_over_budget);
}
