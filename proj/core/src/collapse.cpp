#include "collapsar/collapse.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace collapsar {

TwoComplex TwoComplex::from_triangles(const std::vector<std::array<int, 3>>& tris) {
    if (tris.empty()) throw ValidationError("triangle list is empty");
    std::set<Tri> tset;
    for (const auto& t : tris) {
        Tri s{t[0], t[1], t[2]};
        std::sort(s.begin(), s.end());
        if (s[0] == s[1] || s[1] == s[2])
            throw ValidationError("triangle repeats a vertex");
        if (s[0] <= 0) throw ValidationError("vertex labels must be positive");
        tset.insert(s);
    }

    TwoComplex tc;
    tc.tris_.assign(tset.begin(), tset.end());

    std::set<Edge> eset;
    std::set<int> vset;
    for (const Tri& t : tc.tris_) {
        eset.insert({t[0], t[1]});
        eset.insert({t[0], t[2]});
        eset.insert({t[1], t[2]});
        for (int v : t) vset.insert(v);
    }
    tc.edges_.assign(eset.begin(), eset.end());
    tc.verts_.assign(vset.begin(), vset.end());

    tc.edge_tris_.assign(tc.edges_.size(), {});
    tc.vert_edges_.assign(tc.verts_.size(), {});
    for (size_t ti = 0; ti < tc.tris_.size(); ++ti) {
        const Tri& t = tc.tris_[ti];
        for (const Edge e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
            const int ei = tc.edge_index(e[0], e[1]);
            tc.edge_tris_[static_cast<size_t>(ei)].push_back(static_cast<int>(ti));
        }
    }
    for (size_t ei = 0; ei < tc.edges_.size(); ++ei) {
        for (int v : tc.edges_[ei]) {
            const int vi = tc.vertex_index(v);
            tc.vert_edges_[static_cast<size_t>(vi)].push_back(static_cast<int>(ei));
        }
    }

    tc.tri_alive_.assign(tc.tris_.size(), 1);
    tc.edge_alive_.assign(tc.edges_.size(), 1);
    tc.vert_alive_.assign(tc.verts_.size(), 1);
    tc.edge_inc_.assign(tc.edges_.size(), 0);
    for (const auto& owners : tc.edge_tris_)
        tc.edge_inc_[static_cast<size_t>(&owners - tc.edge_tris_.data())] =
            static_cast<int>(owners.size());
    tc.vert_inc_.assign(tc.verts_.size(), 0);
    for (size_t vi = 0; vi < tc.verts_.size(); ++vi)
        tc.vert_inc_[vi] = static_cast<int>(tc.vert_edges_[vi].size());
    tc.n_tris_ = static_cast<long long>(tc.tris_.size());
    tc.n_edges_ = static_cast<long long>(tc.edges_.size());
    tc.n_verts_ = static_cast<long long>(tc.verts_.size());
    return tc;
}

int TwoComplex::edge_index(int u, int v) const {
    const Edge e = u < v ? Edge{u, v} : Edge{v, u};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

int TwoComplex::vertex_index(int label) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), label);
    if (it == verts_.end() || *it != label) return -1;
    return static_cast<int>(it - verts_.begin());
}

void TwoComplex::remove_triangle(int t) {
    assert(tri_alive_[static_cast<size_t>(t)]);
    tri_alive_[static_cast<size_t>(t)] = 0;
    --n_tris_;
    const Tri& tr = tris_[static_cast<size_t>(t)];
    for (const Edge e : {Edge{tr[0], tr[1]}, Edge{tr[0], tr[2]}, Edge{tr[1], tr[2]}})
        --edge_inc_[static_cast<size_t>(edge_index(e[0], e[1]))];
}

void TwoComplex::collapse_edge_triangle(int e, int t) {
    assert(edge_alive_[static_cast<size_t>(e)] && edge_inc_[static_cast<size_t>(e)] == 1);
    assert(tri_alive_[static_cast<size_t>(t)]);
    edge_alive_[static_cast<size_t>(e)] = 0;
    --n_edges_;
    for (int v : edges_[static_cast<size_t>(e)])
        --vert_inc_[static_cast<size_t>(vertex_index(v))];
    remove_triangle(t);  // decrements edge_inc_ of e as well; e is already dead
}

void TwoComplex::collapse_vertex_edge(int vid, int e) {
    assert(vert_alive_[static_cast<size_t>(vid)] && vert_inc_[static_cast<size_t>(vid)] == 1);
    assert(edge_alive_[static_cast<size_t>(e)]);
    vert_alive_[static_cast<size_t>(vid)] = 0;
    --n_verts_;
    edge_alive_[static_cast<size_t>(e)] = 0;
    --n_edges_;
    for (int v : edges_[static_cast<size_t>(e)])
        --vert_inc_[static_cast<size_t>(vertex_index(v))];
}

bool TwoComplex::is_connected() const {
    if (n_verts_ <= 1) return true;
    int start = -1;
    for (size_t vi = 0; vi < verts_.size(); ++vi)
        if (vert_alive_[vi]) {
            start = static_cast<int>(vi);
            break;
        }
    std::vector<char> seen(verts_.size(), 0);
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    long long visited = 1;
    while (!stack.empty()) {
        const int vi = stack.back();
        stack.pop_back();
        for (int ei : vert_edges_[static_cast<size_t>(vi)]) {
            if (!edge_alive_[static_cast<size_t>(ei)]) continue;
            const Edge& e = edges_[static_cast<size_t>(ei)];
            const int other = e[0] == verts_[static_cast<size_t>(vi)] ? e[1] : e[0];
            const int oi = vertex_index(other);
            if (!seen[static_cast<size_t>(oi)]) {
                seen[static_cast<size_t>(oi)] = 1;
                ++visited;
                stack.push_back(oi);
            }
        }
    }
    return visited == n_verts_;
}

bool TwoComplex::check_incidence_counts() const {
    for (size_t ei = 0; ei < edges_.size(); ++ei) {
        int cnt = 0;
        for (int ti : edge_tris_[ei])
            if (tri_alive_[static_cast<size_t>(ti)]) ++cnt;
        if (cnt != edge_inc_[ei]) return false;
    }
    for (size_t vi = 0; vi < verts_.size(); ++vi) {
        int cnt = 0;
        for (int ei : vert_edges_[vi])
            if (edge_alive_[static_cast<size_t>(ei)]) ++cnt;
        if (cnt != vert_inc_[vi]) return false;
    }
    long long t = 0, e = 0, v = 0;
    for (char a : tri_alive_) t += a;
    for (char a : edge_alive_) e += a;
    for (char a : vert_alive_) v += a;
    return t == n_tris_ && e == n_edges_ && v == n_verts_;
}

std::vector<std::vector<int>> TwoComplex::alive_faces() const {
    std::vector<std::vector<int>> out;
    for (size_t ti = 0; ti < tris_.size(); ++ti)
        if (tri_alive_[ti]) out.push_back({tris_[ti][0], tris_[ti][1], tris_[ti][2]});
    for (size_t ei = 0; ei < edges_.size(); ++ei)
        if (edge_alive_[ei]) out.push_back({edges_[ei][0], edges_[ei][1]});
    for (size_t vi = 0; vi < verts_.size(); ++vi)
        if (vert_alive_[vi]) out.push_back({verts_[vi]});
    return out;
}

std::string removal_log_to_json_lines(const std::vector<RemovalStep>& log) {
    std::ostringstream out;
    for (size_t i = 0; i < log.size(); ++i) {
        out << "{\"step\":" << i << ",\"free\":[";
        for (size_t j = 0; j < log[i].free_face.size(); ++j)
            out << (j ? "," : "") << log[i].free_face[j];
        out << "],\"coface\":[";
        for (size_t j = 0; j < log[i].coface.size(); ++j)
            out << (j ? "," : "") << log[i].coface[j];
        out << "]}\n";
    }
    return out.str();
}

bool replay_removal_log(TwoComplex tc, const std::vector<RemovalStep>& log) {
    for (const RemovalStep& s : log) {
        if (s.free_face.size() == 2 && s.coface.size() == 3) {
            const int e = tc.edge_index(s.free_face[0], s.free_face[1]);
            if (e < 0 || !tc.edge_alive(e) || tc.edge_incidence(e) != 1) return false;
            int t = -1;
            for (int ti : tc.triangles_of_edge(e))
                if (tc.triangle_alive(ti)) t = ti;
            if (t < 0) return false;
            Tri want{s.coface[0], s.coface[1], s.coface[2]};
            std::sort(want.begin(), want.end());
            if (tc.triangles()[static_cast<size_t>(t)] != want) return false;
            tc.collapse_edge_triangle(e, t);
        } else if (s.free_face.size() == 1 && s.coface.size() == 2) {
            const int vid = tc.vertex_index(s.free_face[0]);
            if (vid < 0 || !tc.vertex_alive(vid) || tc.vertex_incidence(vid) != 1) return false;
            int e = -1;
            for (int ei : tc.edges_of_vertex(vid))
                if (tc.edge_alive(ei)) e = ei;
            if (e < 0) return false;
            Edge want{s.coface[0], s.coface[1]};
            std::sort(want.begin(), want.end());
            if (tc.edges()[static_cast<size_t>(e)] != want) return false;
            tc.collapse_vertex_edge(vid, e);
        } else {
            return false;
        }
    }
    return true;
}

TwoComplex collapse_along_tree(const Complex3& c, const SpanningTree& t) {
    const DualGraph g = dual_graph(c);
    if (static_cast<int>(t.parent_arc.size()) != g.node_count() ||
        static_cast<int>(t.arcs.size()) != g.node_count() - 1 || !is_spanning_tree(g, t))
        throw ValidationError("spanning tree does not match the dual graph of the complex");

    const TriangleTable tt = triangle_table(c);
    std::vector<std::array<int, 3>> tris;
    tris.reserve(tt.triangles.size());
    for (const Tri& tr : tt.triangles) tris.push_back({tr[0], tr[1], tr[2]});
    TwoComplex tc = TwoComplex::from_triangles(tris);

    // S_T = skel_2 minus the tree-arc triangles; independent of the root.
    for (int u = 0; u < g.node_count(); ++u) {
        if (u == t.root) continue;
        const int tri_id = g.arc(t.parent_arc[static_cast<size_t>(u)]).triangle;
        tc.remove_triangle(tri_id);
    }
    return tc;
}

std::vector<int> free_edges(const TwoComplex& tc) {
    std::vector<int> out;
    for (size_t ei = 0; ei < tc.edges().size(); ++ei)
        if (tc.edge_alive(static_cast<int>(ei)) && tc.edge_incidence(static_cast<int>(ei)) == 1)
            out.push_back(static_cast<int>(ei));
    return out;
}

CollapseOutcome greedy_collapse(const TwoComplex& tc_in, Rng& rng) {
    CollapseOutcome out;
    out.remainder = tc_in;
    TwoComplex& tc = out.remainder;
    out.input_contract_ok = tc.euler_characteristic() == 1 && tc.is_connected();

    // Phase 1: (free edge, unique triangle) pairs, seeded order. The pool may
    // hold stale entries; staleness is re-checked at pop time.
    std::vector<int> pool = free_edges(tc);
    while (!pool.empty()) {
        const size_t i = static_cast<size_t>(rng.below(pool.size()));
        const int e = pool[i];
        pool[i] = pool.back();
        pool.pop_back();
        if (!tc.edge_alive(e) || tc.edge_incidence(e) != 1) continue;
        int t = -1;
        for (int ti : tc.triangles_of_edge(e))
            if (tc.triangle_alive(ti)) {
                t = ti;
                break;
            }
        const Tri& tr = tc.triangles()[static_cast<size_t>(t)];
        out.removal_log.push_back(
            {{tc.edges()[static_cast<size_t>(e)][0], tc.edges()[static_cast<size_t>(e)][1]},
             {tr[0], tr[1], tr[2]}});
        tc.collapse_edge_triangle(e, t);
        for (const Edge e2 : {Edge{tr[0], tr[1]}, Edge{tr[0], tr[2]}, Edge{tr[1], tr[2]}}) {
            const int ei = tc.edge_index(e2[0], e2[1]);
            if (tc.edge_alive(ei) && tc.edge_incidence(ei) == 1) pool.push_back(ei);
        }
    }
    if (tc.alive_triangles() > 0) {
        out.collapsed_to_point = false;
        return out;
    }

    // Phase 2: (free vertex, unique edge) pairs on the remaining graph.
    pool.clear();
    for (size_t vi = 0; vi < tc.vertices().size(); ++vi)
        if (tc.vertex_alive(static_cast<int>(vi)) &&
            tc.vertex_incidence(static_cast<int>(vi)) == 1)
            pool.push_back(static_cast<int>(vi));
    while (!pool.empty()) {
        const size_t i = static_cast<size_t>(rng.below(pool.size()));
        const int vid = pool[i];
        pool[i] = pool.back();
        pool.pop_back();
        if (!tc.vertex_alive(vid) || tc.vertex_incidence(vid) != 1) continue;
        int e = -1;
        for (int ei : tc.edges_of_vertex(vid))
            if (tc.edge_alive(ei)) {
                e = ei;
                break;
            }
        const Edge& ed = tc.edges()[static_cast<size_t>(e)];
        out.removal_log.push_back({{tc.vertices()[static_cast<size_t>(vid)]}, {ed[0], ed[1]}});
        tc.collapse_vertex_edge(vid, e);
        const int other = ed[0] == tc.vertices()[static_cast<size_t>(vid)] ? ed[1] : ed[0];
        const int oi = tc.vertex_index(other);
        if (tc.vertex_alive(oi) && tc.vertex_incidence(oi) == 1) pool.push_back(oi);
    }

    out.collapsed_to_point =
        tc.alive_triangles() == 0 && tc.alive_edges() == 0 && tc.alive_vertices() == 1;
    return out;
}

CollapseOutcome greedy_collapse(const TwoComplex& tc, std::uint64_t order_seed) {
    Rng rng(order_seed);
    return greedy_collapse(tc, rng);
}

bool trial(const Complex3& c, std::uint64_t rng_seed) {
    require_closed_connected(c);
    const DualGraph g = dual_graph(c);
    Rng rng(rng_seed);
    const SpanningTree t = wilson_sample(g, rng);
    const TwoComplex tc = collapse_along_tree(c, t);
    return greedy_collapse(tc, rng).collapsed_to_point;
}

TrialRunner::TrialRunner(const Complex3& c) : n_(c.facet_count()), graph_(dual_graph(c)) {
    require_closed_connected(c);
    edges_ = collapsar::edge_table(c);
    const TriangleTable tt = triangle_table(c);
    const int F = tt.size();
    const int E = edges_.size();
    const int V = c.vertex_count();

    tri_edges_.resize(static_cast<size_t>(F));
    std::vector<std::vector<int>> edge_tris(static_cast<size_t>(E));
    for (int ti = 0; ti < F; ++ti) {
        const Tri& t = tt.triangles[static_cast<size_t>(ti)];
        const std::array<int, 3> eids = {edges_.index_of(t[0], t[1]),
                                         edges_.index_of(t[0], t[2]),
                                         edges_.index_of(t[1], t[2])};
        tri_edges_[static_cast<size_t>(ti)] = eids;
        for (int e : eids) edge_tris[static_cast<size_t>(e)].push_back(ti);
    }
    edge_tris_off_.assign(static_cast<size_t>(E) + 1, 0);
    for (int e = 0; e < E; ++e)
        edge_tris_off_[static_cast<size_t>(e) + 1] =
            edge_tris_off_[static_cast<size_t>(e)] +
            static_cast<int>(edge_tris[static_cast<size_t>(e)].size());
    edge_tris_flat_.reserve(static_cast<size_t>(edge_tris_off_.back()));
    for (int e = 0; e < E; ++e)
        for (int ti : edge_tris[static_cast<size_t>(e)]) edge_tris_flat_.push_back(ti);

    std::vector<std::vector<int>> vert_edges(static_cast<size_t>(V));
    for (int e = 0; e < E; ++e)
        for (int v : edges_.edges[static_cast<size_t>(e)])
            vert_edges[static_cast<size_t>(v - 1)].push_back(e);
    vert_edges_off_.assign(static_cast<size_t>(V) + 1, 0);
    for (int v = 0; v < V; ++v)
        vert_edges_off_[static_cast<size_t>(v) + 1] =
            vert_edges_off_[static_cast<size_t>(v)] +
            static_cast<int>(vert_edges[static_cast<size_t>(v)].size());
    for (int v = 0; v < V; ++v)
        for (int e : vert_edges[static_cast<size_t>(v)]) vert_edges_flat_.push_back(e);

    pristine_edge_inc_.assign(static_cast<size_t>(E), 0);
    for (int e = 0; e < E; ++e)
        pristine_edge_inc_[static_cast<size_t>(e)] =
            edge_tris_off_[static_cast<size_t>(e) + 1] - edge_tris_off_[static_cast<size_t>(e)];
    pristine_vert_inc_.assign(static_cast<size_t>(V), 0);
    for (int v = 0; v < V; ++v)
        pristine_vert_inc_[static_cast<size_t>(v)] =
            vert_edges_off_[static_cast<size_t>(v) + 1] - vert_edges_off_[static_cast<size_t>(v)];

    tri_alive_.assign(static_cast<size_t>(F), 1);
    edge_alive_.assign(static_cast<size_t>(E), 1);
    vert_alive_.assign(static_cast<size_t>(V), 1);
    edge_inc_ = pristine_edge_inc_;
    vert_inc_ = pristine_vert_inc_;
    pool_.reserve(static_cast<size_t>(E));
}

bool TrialRunner::run(std::uint64_t trial_seed) { return run_impl(trial_seed, nullptr); }

bool TrialRunner::run_recording(std::uint64_t trial_seed,
                                std::vector<std::uint8_t>& edge_free_out) {
    return run_impl(trial_seed, &edge_free_out);
}

bool TrialRunner::run_impl(std::uint64_t trial_seed, std::vector<std::uint8_t>* edge_free_out) {
    Rng rng(trial_seed);
    const int N = graph_.node_count();
    const int E = edges_.size();
    const int F = static_cast<int>(tri_edges_.size());
    const int V = static_cast<int>(pristine_vert_inc_.size());

    // Wilson's algorithm, identical draw order to wilson_sample().
    static thread_local std::vector<int> next_arc, parent_arc;
    static thread_local std::vector<char> in_tree;
    next_arc.assign(static_cast<size_t>(N), -1);
    parent_arc.assign(static_cast<size_t>(N), -1);
    in_tree.assign(static_cast<size_t>(N), 0);
    const int root = static_cast<int>(rng.below(static_cast<std::uint64_t>(N)));
    in_tree[static_cast<size_t>(root)] = 1;
    for (int start = 0; start < N; ++start) {
        if (in_tree[static_cast<size_t>(start)]) continue;
        int u = start;
        while (!in_tree[static_cast<size_t>(u)]) {
            const auto& inc = graph_.incident_arcs(u);
            const int a = inc[static_cast<size_t>(rng.below(inc.size()))];
            next_arc[static_cast<size_t>(u)] = a;
            u = graph_.other_end(a, u);
        }
        u = start;
        while (!in_tree[static_cast<size_t>(u)]) {
            in_tree[static_cast<size_t>(u)] = 1;
            parent_arc[static_cast<size_t>(u)] = next_arc[static_cast<size_t>(u)];
            u = graph_.other_end(next_arc[static_cast<size_t>(u)], u);
        }
    }

    // Reset scratch and delete the tree-arc triangles.
    std::fill(tri_alive_.begin(), tri_alive_.end(), 1);
    std::fill(edge_alive_.begin(), edge_alive_.end(), 1);
    std::fill(vert_alive_.begin(), vert_alive_.end(), 1);
    edge_inc_ = pristine_edge_inc_;
    vert_inc_ = pristine_vert_inc_;
    long long tris_alive = F, edges_alive = E, verts_alive = V;
    for (int u = 0; u < N; ++u) {
        if (u == root) continue;
        const int ti = graph_.arc(parent_arc[static_cast<size_t>(u)]).triangle;
        tri_alive_[static_cast<size_t>(ti)] = 0;
        --tris_alive;
        for (int e : tri_edges_[static_cast<size_t>(ti)]) --edge_inc_[static_cast<size_t>(e)];
    }

    if (edge_free_out) {
        edge_free_out->assign(static_cast<size_t>(E), 0);
        for (int e = 0; e < E; ++e)
            (*edge_free_out)[static_cast<size_t>(e)] =
                edge_inc_[static_cast<size_t>(e)] == 1 ? 1 : 0;
    }

    // Greedy phase 1.
    pool_.clear();
    for (int e = 0; e < E; ++e)
        if (edge_inc_[static_cast<size_t>(e)] == 1) pool_.push_back(e);
    while (!pool_.empty()) {
        const size_t i = static_cast<size_t>(rng.below(pool_.size()));
        const int e = pool_[i];
        pool_[i] = pool_.back();
        pool_.pop_back();
        if (!edge_alive_[static_cast<size_t>(e)] || edge_inc_[static_cast<size_t>(e)] != 1)
            continue;
        int t = -1;
        for (int k = edge_tris_off_[static_cast<size_t>(e)];
             k < edge_tris_off_[static_cast<size_t>(e) + 1]; ++k) {
            const int ti = edge_tris_flat_[static_cast<size_t>(k)];
            if (tri_alive_[static_cast<size_t>(ti)]) {
                t = ti;
                break;
            }
        }
        // collapse (e, t)
        edge_alive_[static_cast<size_t>(e)] = 0;
        --edges_alive;
        for (int v : edges_.edges[static_cast<size_t>(e)])
            --vert_inc_[static_cast<size_t>(v - 1)];
        tri_alive_[static_cast<size_t>(t)] = 0;
        --tris_alive;
        for (int e2 : tri_edges_[static_cast<size_t>(t)]) {
            --edge_inc_[static_cast<size_t>(e2)];
            if (e2 != e && edge_alive_[static_cast<size_t>(e2)] &&
                edge_inc_[static_cast<size_t>(e2)] == 1)
                pool_.push_back(e2);
        }
    }
    if (tris_alive > 0) return false;

    // Greedy phase 2.
    pool_.clear();
    for (int v = 0; v < V; ++v)
        if (vert_inc_[static_cast<size_t>(v)] == 1) pool_.push_back(v);
    while (!pool_.empty()) {
        const size_t i = static_cast<size_t>(rng.below(pool_.size()));
        const int v = pool_[i];
        pool_[i] = pool_.back();
        pool_.pop_back();
        if (!vert_alive_[static_cast<size_t>(v)] || vert_inc_[static_cast<size_t>(v)] != 1)
            continue;
        int e = -1;
        for (int k = vert_edges_off_[static_cast<size_t>(v)];
             k < vert_edges_off_[static_cast<size_t>(v) + 1]; ++k) {
            const int ei = vert_edges_flat_[static_cast<size_t>(k)];
            if (edge_alive_[static_cast<size_t>(ei)]) {
                e = ei;
                break;
            }
        }
        vert_alive_[static_cast<size_t>(v)] = 0;
        --verts_alive;
        edge_alive_[static_cast<size_t>(e)] = 0;
        --edges_alive;
        const Edge& ed = edges_.edges[static_cast<size_t>(e)];
        for (int w : ed) --vert_inc_[static_cast<size_t>(w - 1)];
        const int other = (ed[0] - 1 == v) ? ed[1] - 1 : ed[0] - 1;
        if (vert_alive_[static_cast<size_t>(other)] &&
            vert_inc_[static_cast<size_t>(other)] == 1)
            pool_.push_back(other);
    }
    return tris_alive == 0 && edges_alive == 0 && verts_alive == 1;
}

}  // namespace collapsar
