#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sqp/errors.hpp"
#include "sqp/selection.hpp"
#include "sqp/surface.hpp"

using namespace sqp;

TEST_CASE("selection on the standard seeds") {
    const BandSelection hopf = classify_and_select(BandWord(2, {{1, 2}, {1, 2}}));
    CHECK(hopf.kind == SelectionCase::case1);
    CHECK(hopf.band == 0);
    CHECK(hopf.boundary_component[0] != hopf.boundary_component[1]);

    const BandWord trefoil(2, {{1, 2}, {1, 2}, {1, 2}});
    const BandSelection t = classify_and_select(trefoil);
    CHECK(t.kind == SelectionCase::case2);
    CHECK(t.band == 0);
    CHECK(surface_graph(trefoil).connected_without(t.band));

    CHECK_THROWS_AS(classify_and_select(BandWord(1)), UnlinkInput);
    CHECK_THROWS_AS(classify_and_select(BandWord(3, {{1, 2}, {2, 3}})), UnlinkInput);
}

TEST_CASE("Case 2 skips disk components and bridges") {
    // Disks 1-2 joined by a single bridge, then a trefoil on disks 3-4.
    const BandWord w(4, {{1, 2}, {3, 4}, {3, 4}, {3, 4}});
    const BandSelection s = classify_and_select(w);
    CHECK(s.kind == SelectionCase::case2);
    CHECK(s.band == 1);
}

TEST_CASE("persistent selection") {
    const BandWord hopf(2, {{1, 2}, {1, 2}});
    const BandSelection s = classify_and_select(hopf);
    const BandRelocation identity{0, 1};
    CHECK(persistent_selection(s, hopf, identity) == s);
    CHECK_THROWS_AS(persistent_selection(s, hopf, BandRelocation{std::nullopt, 1}), RelocationLost);
    BandSelection wrong = s;
    wrong.kind = SelectionCase::case2;
    CHECK_THROWS_AS(persistent_selection(wrong, hopf, identity), RelocationLost);
}

TEST_CASE("property: selection rules on random words") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const BandWord w = testing::random_band_word(rng, 6, 10);
        if (is_unlink_surface(w)) {
            CHECK_THROWS_AS(classify_and_select(w), UnlinkInput);
            continue;
        }
        ++checked;
        const BandSelection s = classify_and_select(w);
        CHECK(s == classify_and_select(w));
        const BoundaryTrace trace = trace_boundary(w);
        if (s.kind == SelectionCase::case1) {
            CHECK(trace.band_side_component[s.band][0] != trace.band_side_component[s.band][1]);
            for (std::size_t k = 0; k < s.band; ++k)
                CHECK(trace.band_side_component[k][0] == trace.band_side_component[k][1]);
        } else {
            for (const auto& sides : trace.band_side_component) CHECK(sides[0] == sides[1]);
            const SurfaceGraph g = surface_graph(w);
            CHECK(g.connected_without(s.band));
            int boundaries = 0;
            for (const auto& comp : trace.components)
                boundaries += g.component_of_vertex(comp.front().disk) == s.surface_component ? 1 : 0;
            CHECK(boundaries == 1);
        }
    }
    CHECK(checked > 100);
}
