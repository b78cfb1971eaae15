#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sqp/errors.hpp"
#include "sqp/invariants.hpp"
#include "sqp/surface.hpp"
#include "sqp/tie.hpp"

using namespace sqp;
using testing::poly;

namespace {

const BandWord hopf(2, {{1, 2}, {1, 2}});
const BandWord trefoil(2, {{1, 2}, {1, 2}, {1, 2}});
const LaurentPolynomial companion = poly({{0, 2}, {1, -5}, {2, 2}});

void check_same_invariants(const InvariantReport& a, const InvariantReport& b) {
    CHECK(a.components == b.components);
    CHECK(a.linking == b.linking);
    CHECK(a.alexander == b.alexander);
    CHECK(a.signature == b.signature);
    CHECK(a.determinant == b.determinant);
    CHECK(a.component_alexander == b.component_alexander);
    REQUIRE(a.jones.has_value());
    REQUIRE(b.jones.has_value());
    CHECK(*a.jones == *b.jones);
}

}  // namespace

TEST_CASE("bundled annuli are valid") {
    const AnnulusWord a = bundled_alpha();
    CHECK(a.word.length() == 8);
    CHECK(a.word.strands() == 8);
    CHECK(a.word[a.designated] == Band{4, 7});
    CHECK(underlying_permutation(a.word).cycle_count() == 2);
    CHECK_NOTHROW(validate_annulus(a));
    CHECK_NOTHROW(validate_annulus(trivial_annulus()));

    AnnulusWord broken = a;
    broken.word = parse_band_word("b(1,6) b(3,8) b(2,5) b(1,4) b(3,7) b(2,6) b(5,8) b(4,8)", 8);
    CHECK_THROWS_AS(validate_annulus(broken), InputError);
}

TEST_CASE("word template") {
    const TieWord t = tie_word(trivial_annulus(), trefoil, 1);
    // b(1,2) b(1,2) | b(3,4) [b(1,2)] b(2,4) b(1,3) | b(3,4)
    CHECK(to_string(t.word) == "b(3,4) b(1,2) b(2,4) b(1,3) b(3,4)");
    CHECK(t.word.strands() == 4);
    CHECK(t.marked == 3);
    CHECK(t.relocation == BandRelocation{0, 3, 4});
    CHECK_THROWS_AS(tie_word(trivial_annulus(), trefoil, 3), SelectionInvalid);
}

TEST_CASE("trivial annulus leaves every invariant unchanged") {
    for (const BandWord& seed : {trefoil, hopf}) {
        const TieResult t = tie(trivial_annulus(), seed, classify_and_select(seed));
        check_same_invariants(full_report(seed), full_report(t.word));
    }
}

TEST_CASE("alpha tied into the Hopf band") {
    const TieResult t = tie(bundled_alpha(), hopf, classify_and_select(hopf));
    CHECK(t.word.strands() == 10);
    const InvariantReport r = full_report(t.word, {false});
    CHECK(r.components == 2);
    CHECK(r.linking(0, 1) == 1);
    for (const auto& delta : r.component_alexander) CHECK(delta == companion);
    for (const auto& a : t.certificate) CHECK(a.status == Assertion::Status::pass);
}

TEST_CASE("alpha tied into the trefoil") {
    const TieResult t = tie(bundled_alpha(), trefoil, classify_and_select(trefoil));
    CHECK(t.word.strands() == 10);
    const InvariantReport r = full_report(t.word);
    CHECK(r.components == 1);
    CHECK(r.alexander == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(r.signature == -2);
    REQUIRE(r.jones.has_value());
    CHECK_FALSE(*r.jones == *full_report(trefoil).jones);
}

TEST_CASE("families") {
    const auto f0 = family(trefoil, 0, bundled_alpha());
    REQUIRE(f0.size() == 1);
    CHECK(f0[0].word == trefoil);

    const auto f = family(hopf, 2, bundled_alpha());
    REQUIRE(f.size() == 3);
    CHECK(f[1].word.strands() == 10);
    CHECK(f[2].word.strands() == 18);
    for (int i = 0; i <= 2; ++i) {
        const InvariantReport r = full_report(f[static_cast<std::size_t>(i)].word, {false});
        CHECK(r.components == 2);
        CHECK(r.linking(0, 1) == 1);
        for (const auto& delta : r.component_alexander) {
            CHECK(delta == companion.pow(static_cast<unsigned>(i)));
            CHECK(delta.span() == 2 * i);
        }
    }

    const auto g = family(trefoil, 2, bundled_alpha());
    for (const auto& member : g) {
        const InvariantReport r = full_report(member.word, {false});
        CHECK(r.alexander == poly({{0, 1}, {1, -1}, {2, 1}}));
        CHECK(r.signature == -2);
    }
    CHECK_THROWS_AS(family(BandWord(2), 1, bundled_alpha()), UnlinkInput);
}

TEST_CASE("property: post-conditions hold on random seeds") {
    std::mt19937_64 rng(29);
    int tied = 0;
    while (tied < 15) {
        const BandWord w = testing::random_band_word(rng, 5, 8);
        if (is_unlink_surface(w)) continue;
        ++tied;
        const BandSelection s = classify_and_select(w);
        const TieResult t = tie(bundled_alpha(), w, s);
        CHECK(euler_characteristic(t.word) == euler_characteristic(w));
        CHECK(first_betti(t.word) == first_betti(w));
        CHECK_NOTHROW(persistent_selection(s, t.word, t.relocation));
    }
}

TEST_CASE("selection must match the target") {
    BandSelection bogus = classify_and_select(trefoil);
    bogus.kind = SelectionCase::case1;
    CHECK_THROWS_AS(tie(bundled_alpha(), trefoil, bogus), SelectionInvalid);
}

TEST_CASE("wrong templates are caught") {
    for (const BandWord& seed : {hopf, trefoil}) {
        const BandSelection sel = classify_and_select(seed);
        const TieWord good = tie_word(bundled_alpha(), seed, sel.band);
        const std::size_t mk = good.marked;

        std::vector<Band> swapped = good.word.letters();
        std::swap(swapped[mk - 1], swapped[mk]);
        std::vector<Band> crossed = good.word.letters();
        crossed[mk - 1].j = good.word[mk].j;
        crossed[mk].j = good.word[mk - 1].j;
        std::vector<Band> extra = good.word.letters();
        extra.insert(extra.begin() + static_cast<std::ptrdiff_t>(mk) + 1, Band{4, 7});

        for (const auto& letters : {swapped, crossed, extra}) {
            TieWord bad{BandWord(good.word.strands(), letters), good.relocation, mk};
            CHECK_THROWS_AS(certify_tie(bundled_alpha(), seed, sel, bad), OracleViolation);
        }
    }
    // Companion metadata that lies about the knot type.
    AnnulusWord lying = bundled_alpha();
    lying.companion_alexander = LaurentPolynomial(1L);
    CHECK_THROWS_AS(tie(lying, hopf, classify_and_select(hopf)), OracleViolation);
}

TEST_CASE("any band of alpha can be designated") {
    for (std::size_t d = 0; d < 8; ++d) {
        AnnulusWord a = bundled_alpha();
        a.designated = d;
        CHECK_NOTHROW(tie(a, hopf, classify_and_select(hopf)));
    }
}

TEST_CASE("TB arithmetic") {
    CHECK(tb_connected_sum({-1}) == -1);
    CHECK(tb_connected_sum({-1, -2}) == -2);
    for (int m = 1; m <= 10; ++m) CHECK(tb_connected_sum(std::vector<int>(static_cast<std::size_t>(m), -1)) == -1);
    CHECK_THROWS_AS(tb_connected_sum({}), InputError);
}
