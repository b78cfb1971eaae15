#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqp/braid.hpp"

namespace sqp {

enum class SelectionCase { case1, case2 };

struct BandSelection {
    SelectionCase kind = SelectionCase::case1;
    std::size_t band = 0;  // 0-based letter position
    // case1: boundary components on the two sides of the band.
    // case2: surface component holding the band, and its single boundary component twice.
    int surface_component = -1;
    int boundary_component[2] = {-1, -1};

    friend bool operator==(const BandSelection& a, const BandSelection& b) {
        return a.kind == b.kind && a.band == b.band && a.surface_component == b.surface_component &&
               a.boundary_component[0] == b.boundary_component[0] && a.boundary_component[1] == b.boundary_component[1];
    }
};

// relocation[r] = position in the new word of letter r of the old one; nullopt when it was consumed.
using BandRelocation = std::vector<std::optional<std::size_t>>;

// Case 1 if some band has its sides on different boundary components (first such band),
// otherwise Case 2 with the first non-bridge edge of the first surface component that
// is not a disk. Surface components are ordered by their first band.
BandSelection classify_and_select(const BandWord& w);

// Follows the selected band through a relocation and re-checks the case property there.
BandSelection persistent_selection(const BandSelection& previous, const BandWord& tied, const BandRelocation& relocation);

// Builds the selection of the given kind at `band` if the case property holds there.
std::optional<BandSelection> selection_at(const BandWord& w, SelectionCase kind, std::size_t band);

const char* to_string(SelectionCase kind);

}  // namespace sqp
