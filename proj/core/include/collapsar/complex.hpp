#ifndef COLLAPSAR_COMPLEX_HPP
#define COLLAPSAR_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "collapsar/errors.hpp"

namespace collapsar {

using Facet = std::array<int, 4>;  // sorted ascending
using Tri = std::array<int, 3>;    // sorted ascending
using Edge = std::array<int, 2>;   // sorted ascending

/// Immutable pure 3-dimensional simplicial complex given by its facet list.
///
/// Construction normalizes vertex labels to the contiguous range 1..v
/// (ordered by first appearance in the input) and stores the facets sorted
/// lexicographically, so all derived face indexings are deterministic.
class Complex3 {
public:
    /// Empty placeholder; every real instance comes from the factories below.
    Complex3() = default;

    /// Validates and normalizes. Throws ValidationError on wrong arity,
    /// repeated vertices within a facet, or duplicate facets.
    static Complex3 from_facets(const std::vector<std::array<int, 4>>& raw);

    /// Parses either the facet-list text format (one facet per line, four
    /// positive integers; '#' comments and blank lines ignored) or the JSON
    /// form {"facets": [[a,b,c,d], ...]}. The input is treated as JSON when
    /// its first non-whitespace character is '{' or '['.
    static Complex3 parse(std::string_view text);

    const std::vector<Facet>& facets() const noexcept { return facets_; }
    int vertex_count() const noexcept { return vertex_count_; }
    int facet_count() const noexcept { return static_cast<int>(facets_.size()); }

    /// Facet-list text serialization (sorted facets, one per line).
    std::string to_text() const;
    /// JSON serialization {"facets": [...]}.
    std::string to_json_text() const;

    bool operator==(const Complex3&) const = default;

private:
    std::vector<Facet> facets_;
    int vertex_count_ = 0;
};

/// Face counts by dimension.
struct FVector {
    long long f0 = 0, f1 = 0, f2 = 0, f3 = 0;
    bool operator==(const FVector&) const = default;
};

FVector f_vector(const Complex3& c);

/// All edges of the 1-skeleton, lexicographically indexed, with the number of
/// tetrahedra containing each edge.
struct EdgeTable {
    std::vector<Edge> edges;
    std::vector<int> degree;
    /// Index of edge {u,v}; -1 if absent. Order of u,v irrelevant.
    int index_of(int u, int v) const;
    int size() const { return static_cast<int>(edges.size()); }
};

EdgeTable edge_table(const Complex3& c);

/// All triangles of the 2-skeleton, lexicographically indexed.
struct TriangleTable {
    std::vector<Tri> triangles;
    int index_of(const Tri& t) const;  // -1 if absent
    int size() const { return static_cast<int>(triangles.size()); }
};

TriangleTable triangle_table(const Complex3& c);

/// Undirected multigraph arc; for dual graphs, `triangle` is the id of the
/// shared triangle in the complex's TriangleTable (-1 for synthetic graphs).
struct DualArc {
    int u, v;
    int triangle = -1;
};

/// Face-pairing multigraph. Parallel arcs are kept distinct; self-loops are
/// rejected (a facet cannot be glued to itself along a triangle).
class DualGraph {
public:
    DualGraph(int node_count, std::vector<DualArc> arcs);

    int node_count() const noexcept { return node_count_; }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
    const std::vector<DualArc>& arcs() const noexcept { return arcs_; }
    const DualArc& arc(int id) const { return arcs_[static_cast<size_t>(id)]; }
    /// Arc ids incident to `node`, ascending.
    const std::vector<int>& incident_arcs(int node) const {
        return adjacency_[static_cast<size_t>(node)];
    }
    int degree(int node) const {
        return static_cast<int>(adjacency_[static_cast<size_t>(node)].size());
    }
    int other_end(int arc_id, int node) const {
        const DualArc& a = arcs_[static_cast<size_t>(arc_id)];
        return a.u == node ? a.v : a.u;
    }
    bool is_connected() const;

private:
    int node_count_;
    std::vector<DualArc> arcs_;
    std::vector<std::vector<int>> adjacency_;
};

/// Dual graph of a closed triangulation: one node per facet, one arc per
/// triangle. Throws ValidationError naming the first triangle that does not
/// lie in exactly two facets.
DualGraph dual_graph(const Complex3& c);

/// Closed-3-manifold validation report. `pass()` covers the link conditions;
/// connectivity is reported separately because downstream samplers reject
/// disconnected complexes while the link checks are per-component.
struct ManifoldReport {
    bool triangles_ok = false;     // every triangle in exactly 2 facets
    bool edge_links_ok = false;    // every edge link a single cycle
    bool vertex_links_ok = false;  // every vertex link a connected closed surface, chi 2
    bool connected = false;
    std::string first_failure;  // empty when pass()

    bool pass() const { return triangles_ok && edge_links_ok && vertex_links_ok; }
    bool pass_connected() const { return pass() && connected; }
};

ManifoldReport is_closed_3_manifold(const Complex3& c);

/// Throws ValidationError unless c is a connected closed 3-manifold.
void require_closed_connected(const Complex3& c);

inline constexpr int kCanonicalVertexBound = 12;

/// Lexicographically least facet list over all vertex relabelings, for
/// uniform-arity facet lists of any dimension. Two complexes are isomorphic
/// iff their canonical forms are equal. Refuses inputs with more than
/// `vertex_bound` vertices (the search is exponential in v).
std::vector<std::vector<int>> canonical_facets(const std::vector<std::vector<int>>& facets,
                                               int vertex_bound = kCanonicalVertexBound);

std::vector<Facet> canonical_form(const Complex3& c, int vertex_bound = kCanonicalVertexBound);

}  // namespace collapsar

#endif
