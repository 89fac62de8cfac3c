#ifndef COLLAPSAR_COLLAPSE_HPP
#define COLLAPSAR_COLLAPSE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "collapsar/complex.hpp"
#include "collapsar/rng.hpp"
#include "collapsar/spanning.hpp"

namespace collapsar {

/// Mutable pure 2-complex: triangle set with alive flags plus maintained
/// edge/vertex incidence counts, supporting free-face queries and elementary
/// collapses. Faces never resurrect; incidence counts only decrease.
class TwoComplex {
public:
    static TwoComplex from_triangles(const std::vector<std::array<int, 3>>& tris);

    // static tables (ids stay valid across mutations)
    const std::vector<Tri>& triangles() const noexcept { return tris_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& vertices() const noexcept { return verts_; }
    const std::vector<int>& triangles_of_edge(int e) const {
        return edge_tris_[static_cast<size_t>(e)];
    }
    const std::vector<int>& edges_of_vertex(int vid) const {
        return vert_edges_[static_cast<size_t>(vid)];
    }
    int edge_index(int u, int v) const;
    int vertex_index(int label) const;

    // alive state
    bool triangle_alive(int t) const { return tri_alive_[static_cast<size_t>(t)]; }
    bool edge_alive(int e) const { return edge_alive_[static_cast<size_t>(e)]; }
    bool vertex_alive(int vid) const { return vert_alive_[static_cast<size_t>(vid)]; }
    int edge_incidence(int e) const { return edge_inc_[static_cast<size_t>(e)]; }
    int vertex_incidence(int vid) const { return vert_inc_[static_cast<size_t>(vid)]; }
    long long alive_triangles() const noexcept { return n_tris_; }
    long long alive_edges() const noexcept { return n_edges_; }
    long long alive_vertices() const noexcept { return n_verts_; }

    /// Removes a triangle alone (the trace of a 3-cell collapse above this
    /// complex); updates edge incidences.
    void remove_triangle(int t);
    /// Elementary collapse of a free edge with its unique alive triangle.
    void collapse_edge_triangle(int e, int t);
    /// Elementary collapse of a free vertex with its unique alive edge.
    void collapse_vertex_edge(int vid, int e);

    /// chi of the alive faces.
    long long euler_characteristic() const { return n_verts_ - n_edges_ + n_tris_; }
    bool is_connected() const;

    /// Full recount of incidence counters; true iff consistent.
    bool check_incidence_counts() const;

    /// Alive faces as maximal-face generators (for homology and reports).
    std::vector<std::vector<int>> alive_faces() const;

private:
    std::vector<Tri> tris_;
    std::vector<Edge> edges_;
    std::vector<int> verts_;  // sorted labels
    std::vector<std::vector<int>> edge_tris_;
    std::vector<std::vector<int>> vert_edges_;
    std::vector<char> tri_alive_, edge_alive_, vert_alive_;
    std::vector<int> edge_inc_, vert_inc_;
    long long n_tris_ = 0, n_edges_ = 0, n_verts_ = 0;
};

/// One recorded elementary collapse.
struct RemovalStep {
    std::vector<int> free_face;  // vertex labels (1 or 2 of them)
    std::vector<int> coface;     // vertex labels (2 or 3 of them)
};

struct CollapseOutcome {
    bool collapsed_to_point = false;
    /// Input satisfied the connected, chi = 1 contract under which the
    /// boolean is order-independent; when false the outcome reports one
    /// literal greedy run.
    bool input_contract_ok = false;
    TwoComplex remainder;
    std::vector<RemovalStep> removal_log;
};

/// JSON-lines certificate of a removal log: one {"step":..,"free":..,"coface":..}
/// object per line.
std::string removal_log_to_json_lines(const std::vector<RemovalStep>& log);

/// Replays a removal log against a fresh copy of `start`, verifying that each
/// step removes a face whose alive coface set has size exactly one.
bool replay_removal_log(TwoComplex start, const std::vector<RemovalStep>& log);

/// Collapses all 3-cells of `c` along spanning tree `t` of its dual graph:
/// the root facet is removed outright and every other facet leaves through
/// the triangle of its parent arc. The result keeps the full 1-skeleton and
/// has facet_count+1 triangles; its faces depend only on the arc set of `t`.
TwoComplex collapse_along_tree(const Complex3& c, const SpanningTree& t);

/// Alive edges of incidence exactly one.
std::vector<int> free_edges(const TwoComplex& tc);

/// Greedy collapsibility: phase 1 removes (free edge, triangle) pairs in
/// seeded random order until none remain; if no triangle survived, phase 2
/// removes (free vertex, edge) pairs. True iff a single vertex remains.
CollapseOutcome greedy_collapse(const TwoComplex& tc, std::uint64_t order_seed);
CollapseOutcome greedy_collapse(const TwoComplex& tc, Rng& rng);

/// One Bernoulli draw of the collapsing probability: uniform spanning tree,
/// collapse along it, greedy collapse of the remainder. Validates the input.
bool trial(const Complex3& c, std::uint64_t rng_seed);

/// Allocation-free trial loop over a fixed complex: validates once, then
/// `run(seed)` produces the same boolean as `trial` for the same seed.
class TrialRunner {
public:
    explicit TrialRunner(const Complex3& c);

    bool run(std::uint64_t trial_seed);
    /// Like run(), but also reports which edges are free in S_T before the
    /// greedy phase (indices into edge_table()).
    bool run_recording(std::uint64_t trial_seed, std::vector<std::uint8_t>& edge_free_out);

    const DualGraph& dual() const { return graph_; }
    const EdgeTable& edge_table() const { return edges_; }
    int facet_count() const { return n_; }

private:
    bool run_impl(std::uint64_t trial_seed, std::vector<std::uint8_t>* edge_free_out);

    int n_;
    DualGraph graph_;
    EdgeTable edges_;
    std::vector<std::array<int, 3>> tri_edges_;   // per triangle: its 3 edge ids
    std::vector<int> edge_tris_flat_;             // CSR: triangle ids per edge
    std::vector<int> edge_tris_off_;
    std::vector<int> vert_edges_flat_;            // CSR: edge ids per vertex (0-based)
    std::vector<int> vert_edges_off_;
    std::vector<int> pristine_edge_inc_;
    std::vector<int> pristine_vert_inc_;
    // per-trial scratch
    std::vector<char> tri_alive_, edge_alive_, vert_alive_;
    std::vector<int> edge_inc_, vert_inc_, pool_;
};

}  // namespace collapsar

#endif
