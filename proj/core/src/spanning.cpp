#include "collapsar/spanning.hpp"

#include <algorithm>
#include <numeric>

namespace collapsar {

bool is_spanning_tree(const DualGraph& g, const SpanningTree& t) {
    const int n = g.node_count();
    if (static_cast<int>(t.arcs.size()) != n - 1) return false;
    if (static_cast<int>(t.parent_arc.size()) != n) return false;
    if (t.root < 0 || t.root >= n) return false;
    if (!std::is_sorted(t.arcs.begin(), t.arcs.end())) return false;
    if (std::adjacent_find(t.arcs.begin(), t.arcs.end()) != t.arcs.end()) return false;

    // union-find acyclicity + coverage
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int a : t.arcs) {
        if (a < 0 || a >= g.arc_count()) return false;
        const int ru = find(g.arc(a).u), rv = find(g.arc(a).v);
        if (ru == rv) return false;  // cycle
        parent[static_cast<size_t>(ru)] = rv;
    }

    // parent pointers consistent: root has -1, every other node's parent arc
    // is a tree arc incident to it, and following parents reaches the root.
    if (t.parent_arc[static_cast<size_t>(t.root)] != -1) return false;
    for (int u = 0; u < n; ++u) {
        if (u == t.root) continue;
        const int pa = t.parent_arc[static_cast<size_t>(u)];
        if (pa < 0 || !std::binary_search(t.arcs.begin(), t.arcs.end(), pa)) return false;
        if (g.arc(pa).u != u && g.arc(pa).v != u) return false;
    }
    for (int u = 0; u < n; ++u) {
        int cur = u, steps = 0;
        while (cur != t.root) {
            cur = g.other_end(t.parent_arc[static_cast<size_t>(cur)], cur);
            if (++steps > n) return false;
        }
    }
    return true;
}

SpanningTree wilson_sample_rooted(const DualGraph& g, int root, Rng& rng) {
    const int n = g.node_count();
    if (root < 0 || root >= n) throw DomainError("wilson root out of range");
    if (!g.is_connected()) throw ValidationError("wilson_sample requires a connected graph");

    std::vector<char> in_tree(static_cast<size_t>(n), 0);
    std::vector<int> next_arc(static_cast<size_t>(n), -1);
    SpanningTree t;
    t.root = root;
    t.parent_arc.assign(static_cast<size_t>(n), -1);
    in_tree[static_cast<size_t>(root)] = 1;

    for (int start = 0; start < n; ++start) {
        if (in_tree[static_cast<size_t>(start)]) continue;
        // random walk until hitting the tree; loop erasure happens implicitly
        // by overwriting next_arc on revisits
        int u = start;
        while (!in_tree[static_cast<size_t>(u)]) {
            const auto& inc = g.incident_arcs(u);
            const int a = inc[static_cast<size_t>(rng.below(inc.size()))];
            next_arc[static_cast<size_t>(u)] = a;
            u = g.other_end(a, u);
        }
        // commit the loop-erased path
        u = start;
        while (!in_tree[static_cast<size_t>(u)]) {
            in_tree[static_cast<size_t>(u)] = 1;
            const int a = next_arc[static_cast<size_t>(u)];
            t.parent_arc[static_cast<size_t>(u)] = a;
            t.arcs.push_back(a);
            u = g.other_end(a, u);
        }
    }
    std::sort(t.arcs.begin(), t.arcs.end());
    return t;
}

SpanningTree wilson_sample(const DualGraph& g, Rng& rng) {
    const int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.node_count())));
    return wilson_sample_rooted(g, root, rng);
}

SpanningTree wilson_sample(const DualGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    return wilson_sample(g, rng);
}

TreeCount count_spanning_trees(const DualGraph& g) {
    const int n = g.node_count();
    if (n == 1) return TreeCount{1};

    // Reduced Laplacian (drop node 0), Bareiss fraction-free elimination.
    const int m = n - 1;
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(m),
                                          std::vector<mpz_class>(static_cast<size_t>(m), 0));
    for (const DualArc& arc : g.arcs()) {
        if (arc.u > 0) a[static_cast<size_t>(arc.u - 1)][static_cast<size_t>(arc.u - 1)] += 1;
        if (arc.v > 0) a[static_cast<size_t>(arc.v - 1)][static_cast<size_t>(arc.v - 1)] += 1;
        if (arc.u > 0 && arc.v > 0) {
            a[static_cast<size_t>(arc.u - 1)][static_cast<size_t>(arc.v - 1)] -= 1;
            a[static_cast<size_t>(arc.v - 1)][static_cast<size_t>(arc.u - 1)] -= 1;
        }
    }

    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return TreeCount{0};  // singular: disconnected
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                mpz_class num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                    a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                                a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                    a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    mpz_class det = a[static_cast<size_t>(m - 1)][static_cast<size_t>(m - 1)] * sign;
    if (det < 0) det = -det;  // Laplacian minors are non-negative
    return TreeCount{det};
}

namespace {

struct UnionFind {
    std::vector<int> parent, rank_;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)), rank_(static_cast<size_t>(n), 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (rank_[static_cast<size_t>(x)] < rank_[static_cast<size_t>(y)]) std::swap(x, y);
        parent[static_cast<size_t>(y)] = x;
        if (rank_[static_cast<size_t>(x)] == rank_[static_cast<size_t>(y)])
            ++rank_[static_cast<size_t>(x)];
        return true;
    }
};

struct TreeEnumerator {
    const DualGraph& g;
    const std::function<bool(const SpanningTree&)>& yield;
    std::vector<int> chosen;
    std::vector<char> deleted;
    bool stopped = false;

    TreeEnumerator(const DualGraph& graph, const std::function<bool(const SpanningTree&)>& cb)
        : g(graph), yield(cb), deleted(static_cast<size_t>(graph.arc_count()), 0) {}

    // Does the graph minus deleted arcs connect everything, using only arcs >= from
    // plus the already-chosen ones?
    bool connectable(int from, const UnionFind& uf_in) {
        UnionFind uf = uf_in;
        int components = 0;
        for (int u = 0; u < g.node_count(); ++u)
            if (uf.find(u) == u) ++components;
        for (int a = from; a < g.arc_count() && components > 1; ++a) {
            if (deleted[static_cast<size_t>(a)]) continue;
            if (uf.unite(g.arc(a).u, g.arc(a).v)) --components;
        }
        return components == 1;
    }

    void emit() {
        SpanningTree t;
        t.root = 0;
        t.arcs = chosen;
        std::sort(t.arcs.begin(), t.arcs.end());
        t.parent_arc.assign(static_cast<size_t>(g.node_count()), -1);
        // orient towards node 0 by BFS over tree arcs
        std::vector<std::vector<int>> inc(static_cast<size_t>(g.node_count()));
        for (int a : t.arcs) {
            inc[static_cast<size_t>(g.arc(a).u)].push_back(a);
            inc[static_cast<size_t>(g.arc(a).v)].push_back(a);
        }
        std::vector<int> queue{0};
        std::vector<char> seen(static_cast<size_t>(g.node_count()), 0);
        seen[0] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int a : inc[static_cast<size_t>(u)]) {
                const int w = g.other_end(a, u);
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    t.parent_arc[static_cast<size_t>(w)] = a;
                    queue.push_back(w);
                }
            }
        }
        if (!yield(t)) stopped = true;
    }

    void recurse(int next_arc, UnionFind uf, int picked) {
        if (stopped) return;
        if (picked == g.node_count() - 1) {
            emit();
            return;
        }
        // lowest-indexed undecided arc joining two components
        int a = next_arc;
        while (a < g.arc_count()) {
            if (!deleted[static_cast<size_t>(a)] && uf.find(g.arc(a).u) != uf.find(g.arc(a).v))
                break;
            ++a;
        }
        if (a >= g.arc_count()) return;

        {  // include (contract)
            UnionFind uf2 = uf;
            uf2.unite(g.arc(a).u, g.arc(a).v);
            chosen.push_back(a);
            recurse(a + 1, std::move(uf2), picked + 1);
            chosen.pop_back();
            if (stopped) return;
        }
        {  // exclude (delete), only if the rest can still connect
            deleted[static_cast<size_t>(a)] = 1;
            if (connectable(a + 1, uf)) recurse(a + 1, uf, picked);
            deleted[static_cast<size_t>(a)] = 0;
        }
    }
};

}  // namespace

void enumerate_spanning_trees(const DualGraph& g, std::uint64_t limit,
                              const std::function<bool(const SpanningTree&)>& yield) {
    if (!g.is_connected())
        throw ValidationError("enumerate_spanning_trees requires a connected graph");
    const TreeCount count = count_spanning_trees(g);
    if (count.value > static_cast<unsigned long>(limit))
        throw RefusalError("spanning tree count " + count.value.get_str() +
                               " exceeds the limit of " + std::to_string(limit),
                           count.value.get_str());
    if (g.node_count() == 1) {
        SpanningTree t;
        t.root = 0;
        t.parent_arc = {-1};
        yield(t);
        return;
    }
    TreeEnumerator e(g, yield);
    e.recurse(0, UnionFind(g.node_count()), 0);
}

std::vector<SpanningTree> all_spanning_trees(const DualGraph& g, std::uint64_t limit) {
    std::vector<SpanningTree> out;
    enumerate_spanning_trees(g, limit, [&](const SpanningTree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace collapsar
