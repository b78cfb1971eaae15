#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sqp/braid.hpp"

namespace sqp {

struct SurfaceEdge {
    int u = 1;
    int v = 2;
    std::size_t position = 0;  // index of the band letter in the word
};

// Retraction graph of the canonical surface F(w): one vertex per disk, one
// edge per band. Vertices are 1-based, components are 0-based labels ordered
// by their smallest vertex.
class SurfaceGraph {
public:
    explicit SurfaceGraph(const BandWord& word);

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<SurfaceEdge>& edges() const { return edges_; }

    int component_count() const { return component_count_; }
    int component_of_vertex(int v) const { return component_[static_cast<std::size_t>(v - 1)]; }
    int component_of_edge(std::size_t k) const { return component_of_vertex(edges_[k].u); }

    // bridges()[k] is true when removing edge k disconnects its component.
    std::vector<bool> bridges() const;
    // Connectivity of the component of edge k with edge k deleted, recomputed from scratch.
    bool connected_without(std::size_t k) const;

private:
    int vertex_count_;
    std::vector<SurfaceEdge> edges_;
    std::vector<int> component_;
    int component_count_ = 0;
};

struct BoundaryArc {
    enum class Kind { disk_edge, band_side };

    Kind kind = Kind::disk_edge;
    // disk_edge: the disk the arc runs along. band_side: the disk the side leaves.
    int disk = 1;
    // band_side: the band. disk_edge: the band at which the arc ends (unused for a full circle).
    std::size_t band = 0;
    // band_side only. Side 0 runs from disk i to disk j, side 1 from j back to i.
    int side = 0;
    bool full_circle = false;
};

struct BoundaryTrace {
    // Each component is a cyclic sequence of arcs. Components are ordered like
    // the cycles of the underlying permutation (by smallest disk whose base
    // point they pass).
    std::vector<std::vector<BoundaryArc>> components;
    // Disks whose base point each component passes; equals the matching permutation cycle as a set.
    std::vector<std::vector<int>> base_disks;
    // band_side_component[k][s] = boundary component carrying side s of band k.
    std::vector<std::array<int, 2>> band_side_component;

    std::size_t component_count() const { return components.size(); }
};

struct GenusEntry {
    int component = 0;
    int euler = 0;
    int genus = 0;
    int boundary_count = 0;
};

SurfaceGraph surface_graph(const BandWord& word);
int euler_characteristic(const BandWord& word);
int first_betti(const BandWord& word);
BoundaryTrace trace_boundary(const BandWord& word);
std::vector<GenusEntry> genus_profile(const BandWord& word);
// True iff the retraction graph is a forest, i.e. F(w) is a union of disks.
bool is_unlink_surface(const BandWord& word);

}  // namespace sqp
