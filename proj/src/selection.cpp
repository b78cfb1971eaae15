#include "sqp/selection.hpp"

#include <string>

#include "sqp/errors.hpp"
#include "sqp/surface.hpp"

namespace sqp {

const char* to_string(SelectionCase kind) { return kind == SelectionCase::case1 ? "case1" : "case2"; }

std::optional<BandSelection> selection_at(const BandWord& w, SelectionCase kind, std::size_t band) {
    if (band >= w.length()) return std::nullopt;
    const BoundaryTrace trace = trace_boundary(w);
    const auto sides = trace.band_side_component[band];
    BandSelection s;
    s.kind = kind;
    s.band = band;
    s.boundary_component[0] = sides[0];
    s.boundary_component[1] = sides[1];
    if (kind == SelectionCase::case1) {
        if (sides[0] == sides[1]) return std::nullopt;
        return s;
    }
    if (sides[0] != sides[1]) return std::nullopt;
    const SurfaceGraph g = surface_graph(w);
    if (!g.connected_without(band)) return std::nullopt;
    s.surface_component = g.component_of_edge(band);
    // The surface component must have exactly one boundary component.
    for (std::size_t c = 0; c < trace.component_count(); ++c) {
        if (g.component_of_vertex(trace.components[c].front().disk) == s.surface_component &&
            static_cast<int>(c) != sides[0]) {
            return std::nullopt;
        }
    }
    return s;
}

BandSelection classify_and_select(const BandWord& w) {
    if (is_unlink_surface(w)) {
        throw UnlinkInput("the surface of this word is a union of disks, so its closure is an unlink; "
                          "no band can carry the companion");
    }
    const BoundaryTrace trace = trace_boundary(w);
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (trace.band_side_component[k][0] != trace.band_side_component[k][1]) {
            return *selection_at(w, SelectionCase::case1, k);
        }
    }
    const SurfaceGraph g = surface_graph(w);
    const std::vector<bool> bridges = g.bridges();
    std::vector<bool> visited(static_cast<std::size_t>(g.component_count()), false);
    for (std::size_t k = 0; k < w.length(); ++k) {
        const auto comp = static_cast<std::size_t>(g.component_of_edge(k));
        if (visited[comp]) continue;
        visited[comp] = true;
        for (std::size_t e = k; e < w.length(); ++e) {
            if (g.component_of_edge(e) != static_cast<int>(comp) || bridges[e]) continue;
            if (auto s = selection_at(w, SelectionCase::case2, e)) return *s;
            throw OracleViolation("non-bridge band " + std::to_string(e + 1) +
                                  " fails the Case 2 property although no band separates two boundary components");
        }
    }
    throw OracleViolation("surface is not a union of disks but every band is a bridge");
}

BandSelection persistent_selection(const BandSelection& previous, const BandWord& tied, const BandRelocation& relocation) {
    if (previous.band >= relocation.size() || !relocation[previous.band]) {
        throw RelocationLost("selected band " + std::to_string(previous.band + 1) + " has no image");
    }
    const std::size_t image = *relocation[previous.band];
    auto s = selection_at(tied, previous.kind, image);
    if (!s) {
        throw RelocationLost(std::string("image band ") + std::to_string(image + 1) + " fails the " +
                             to_string(previous.kind) + " property");
    }
    return *s;
}

}  // namespace sqp
