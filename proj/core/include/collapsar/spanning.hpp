#ifndef COLLAPSAR_SPANNING_HPP
#define COLLAPSAR_SPANNING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "collapsar/complex.hpp"
#include "collapsar/rng.hpp"

namespace collapsar {

/// Rooted spanning tree of a DualGraph.
struct SpanningTree {
    int root = 0;
    std::vector<int> arcs;        // tree arc ids, sorted ascending, size node_count-1
    std::vector<int> parent_arc;  // per node: arc towards the root, -1 at the root
};

/// Full invariant check: arcs form a connected acyclic cover and the parent
/// pointers are consistent with them.
bool is_spanning_tree(const DualGraph& g, const SpanningTree& t);

/// Uniform spanning tree via Wilson's loop-erased random walks. The root is
/// drawn uniformly first; walk starts are tried in ascending node order, each
/// step picking uniformly among incident arcs. Throws on disconnected input.
SpanningTree wilson_sample(const DualGraph& g, Rng& rng);
SpanningTree wilson_sample(const DualGraph& g, std::uint64_t seed);

/// Wilson's algorithm with a forced root (the tree law conditioned on nothing:
/// the uniform distribution is the same for every root).
SpanningTree wilson_sample_rooted(const DualGraph& g, int root, Rng& rng);

/// Exact spanning-tree count.
struct TreeCount {
    mpz_class value;
};

/// Matrix-tree theorem: fraction-free integer determinant of the reduced
/// Laplacian. Returns 0 for disconnected graphs.
TreeCount count_spanning_trees(const DualGraph& g);

/// Enumerates every spanning tree exactly once, in the deterministic order
/// given by include/exclude recursion on the lowest-indexed undecided arc
/// (include first). Counts first and refuses when the count exceeds `limit`.
/// The callback may return false to stop early. Trees are rooted at node 0.
void enumerate_spanning_trees(const DualGraph& g, std::uint64_t limit,
                              const std::function<bool(const SpanningTree&)>& yield);

/// Convenience: collect all spanning trees (subject to the same limit).
std::vector<SpanningTree> all_spanning_trees(const DualGraph& g, std::uint64_t limit);

}  // namespace collapsar

#endif
