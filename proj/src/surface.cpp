#include "sqp/surface.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqp/errors.hpp"

namespace sqp {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

SurfaceGraph::SurfaceGraph(const BandWord& word) : vertex_count_(word.strands()) {
    DisjointSets sets(vertex_count_);
    for (std::size_t k = 0; k < word.length(); ++k) {
        edges_.push_back({word[k].i, word[k].j, k});
        sets.unite(word[k].i - 1, word[k].j - 1);
    }
    component_.assign(static_cast<std::size_t>(vertex_count_), -1);
    std::vector<int> label_of_root(static_cast<std::size_t>(vertex_count_), -1);
    for (int v = 0; v < vertex_count_; ++v) {
        int root = sets.find(v);
        if (label_of_root[static_cast<std::size_t>(root)] < 0) label_of_root[static_cast<std::size_t>(root)] = component_count_++;
        component_[static_cast<std::size_t>(v)] = label_of_root[static_cast<std::size_t>(root)];
    }
}

std::vector<bool> SurfaceGraph::bridges() const {
    // Iterative lowlink DFS. Parallel edges are told apart by edge id, so a
    // doubled band is never a bridge.
    const auto n = static_cast<std::size_t>(vertex_count_);
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        adj[static_cast<std::size_t>(edges_[k].u - 1)].push_back({edges_[k].v - 1, k});
        adj[static_cast<std::size_t>(edges_[k].v - 1)].push_back({edges_[k].u - 1, k});
    }
    std::vector<bool> is_bridge(edges_.size(), false);
    std::vector<int> order(n, -1), low(n, 0);
    int clock = 0;
    struct Frame {
        int vertex;
        std::size_t via_edge;
        std::size_t next;
    };
    constexpr std::size_t no_edge = static_cast<std::size_t>(-1);
    for (std::size_t root = 0; root < n; ++root) {
        if (order[root] >= 0) continue;
        std::vector<Frame> stack{{static_cast<int>(root), no_edge, 0}};
        order[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto v = static_cast<std::size_t>(f.vertex);
            if (f.next < adj[v].size()) {
                auto [w, k] = adj[v][f.next++];
                if (k == f.via_edge) continue;
                auto wu = static_cast<std::size_t>(w);
                if (order[wu] < 0) {
                    order[wu] = low[wu] = clock++;
                    stack.push_back({w, k, 0});
                } else {
                    low[v] = std::min(low[v], order[wu]);
                }
            } else {
                const std::size_t via = f.via_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    auto parent = static_cast<std::size_t>(stack.back().vertex);
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] > order[parent]) is_bridge[via] = true;
                }
            }
        }
    }
    return is_bridge;
}

bool SurfaceGraph::connected_without(std::size_t k) const {
    DisjointSets sets(vertex_count_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (e != k) sets.unite(edges_[e].u - 1, edges_[e].v - 1);
    }
    return sets.find(edges_[k].u - 1) == sets.find(edges_[k].v - 1);
}

SurfaceGraph surface_graph(const BandWord& word) { return SurfaceGraph(word); }

int euler_characteristic(const BandWord& word) {
    return word.strands() - static_cast<int>(word.length());
}

int first_betti(const BandWord& word) {
    return SurfaceGraph(word).component_count() - euler_characteristic(word);
}

BoundaryTrace trace_boundary(const BandWord& word) {
    const std::size_t len = word.length();
    const auto n = static_cast<std::size_t>(word.strands());

    // Bands meeting each disk, in word order.
    std::vector<std::vector<std::size_t>> at_disk(n + 1);
    for (std::size_t k = 0; k < len; ++k) {
        at_disk[static_cast<std::size_t>(word[k].i)].push_back(k);
        at_disk[static_cast<std::size_t>(word[k].j)].push_back(k);
    }
    auto next_band = [&](int disk, std::size_t after) {
        const auto& list = at_disk[static_cast<std::size_t>(disk)];
        auto it = std::upper_bound(list.begin(), list.end(), after);
        return it == list.end() ? list.front() : *it;
    };

    struct Raw {
        std::vector<BoundaryArc> arcs;
        std::vector<int> base;
    };
    std::vector<Raw> raw;
    std::vector<std::array<int, 2>> side_raw(len, {-1, -1});

    for (std::size_t k0 = 0; k0 < len; ++k0) {
        for (int s0 = 0; s0 < 2; ++s0) {
            if (side_raw[k0][static_cast<std::size_t>(s0)] >= 0) continue;
            Raw comp;
            const int label = static_cast<int>(raw.size());
            std::size_t k = k0;
            int s = s0;
            do {
                side_raw[k][static_cast<std::size_t>(s)] = label;
                const Band& b = word[k];
                const int from = s == 0 ? b.i : b.j;
                const int to = s == 0 ? b.j : b.i;
                comp.arcs.push_back({BoundaryArc::Kind::band_side, from, k, s, false});
                const std::size_t k_next = next_band(to, k);
                if (k_next <= k) comp.base.push_back(to);  // walking on past the end of the word
                comp.arcs.push_back({BoundaryArc::Kind::disk_edge, to, k_next, 0, false});
                s = (word[k_next].i == to) ? 0 : 1;
                k = k_next;
            } while (!(k == k0 && s == s0));
            raw.push_back(std::move(comp));
        }
    }
    for (int d = 1; d <= word.strands(); ++d) {
        if (!at_disk[static_cast<std::size_t>(d)].empty()) continue;
        Raw comp;
        comp.arcs.push_back({BoundaryArc::Kind::disk_edge, d, 0, 0, true});
        comp.base.push_back(d);
        raw.push_back(std::move(comp));
    }

    for (auto& r : raw) std::sort(r.base.begin(), r.base.end());
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return raw[a].base.front() < raw[b].base.front();
    });
    std::vector<int> relabel(raw.size());
    BoundaryTrace trace;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        relabel[order[pos]] = static_cast<int>(pos);
        trace.components.push_back(std::move(raw[order[pos]].arcs));
        trace.base_disks.push_back(std::move(raw[order[pos]].base));
    }
    trace.band_side_component.resize(len);
    for (std::size_t k = 0; k < len; ++k) {
        trace.band_side_component[k] = {relabel[static_cast<std::size_t>(side_raw[k][0])],
                                        relabel[static_cast<std::size_t>(side_raw[k][1])]};
    }
    return trace;
}

std::vector<GenusEntry> genus_profile(const BandWord& word) {
    const SurfaceGraph graph(word);
    const BoundaryTrace trace = trace_boundary(word);
    std::vector<GenusEntry> result(static_cast<std::size_t>(graph.component_count()));
    for (int c = 0; c < graph.component_count(); ++c) result[static_cast<std::size_t>(c)].component = c;
    for (int v = 1; v <= graph.vertex_count(); ++v) ++result[static_cast<std::size_t>(graph.component_of_vertex(v))].euler;
    for (std::size_t k = 0; k < graph.edge_count(); ++k) --result[static_cast<std::size_t>(graph.component_of_edge(k))].euler;
    for (const auto& comp : trace.components) {
        ++result[static_cast<std::size_t>(graph.component_of_vertex(comp.front().disk))].boundary_count;
    }
    for (auto& e : result) {
        const int twice_genus = 2 - e.euler - e.boundary_count;
        if (twice_genus < 0 || twice_genus % 2 != 0) {
            throw OracleViolation("boundary trace inconsistent on surface component " + std::to_string(e.component) +
                                  ": chi=" + std::to_string(e.euler) + ", b=" + std::to_string(e.boundary_count));
        }
        e.genus = twice_genus / 2;
    }
    return result;
}

bool is_unlink_surface(const BandWord& word) { return first_betti(word) == 0; }

}  // namespace sqp
