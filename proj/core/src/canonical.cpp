#include <algorithm>
#include <map>
#include <set>

#include "collapsar/complex.hpp"

namespace collapsar {

namespace {

// Partial relabeling during the canonical search. label[i] is the new label
// of internal vertex i (1-based), 0 while unassigned; `used` marks facets
// already emitted into the canonical prefix.
struct SearchState {
    std::vector<int> label;
    std::vector<char> used;
    int next_label = 1;
};

}  // namespace

// Lexicographically least sorted facet list over all relabelings, found by
// building the output facet by facet: at each step every (state, remaining
// facet) pair proposes its best achievable image (unassigned vertices
// optimistically take the smallest fresh labels); only proposals matching the
// global minimum survive, branching over the ways to realize it. Because
// list comparison is facet-by-facet, the greedy prefix is exact, and the
// surviving states all realize the same minimal list.
std::vector<std::vector<int>> canonical_facets(const std::vector<std::vector<int>>& facets_in,
                                               int vertex_bound) {
    if (facets_in.empty()) throw ValidationError("cannot canonicalize an empty facet list");
    const size_t arity = facets_in[0].size();
    if (arity == 0) throw ValidationError("facets must be non-empty");

    // Dense internal vertex ids.
    std::map<int, int> dense;
    std::vector<std::vector<int>> facets;
    facets.reserve(facets_in.size());
    for (const auto& f : facets_in) {
        if (f.size() != arity) throw ValidationError("facets must have uniform arity");
        std::vector<int> g;
        g.reserve(arity);
        for (int v : f) {
            auto [it, _] = dense.try_emplace(v, static_cast<int>(dense.size()));
            g.push_back(it->second);
        }
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw ValidationError("facet repeats a vertex");
        facets.push_back(std::move(g));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    const int v = static_cast<int>(dense.size());
    const int n = static_cast<int>(facets.size());
    if (v > vertex_bound)
        throw RefusalError("canonical form refused: " + std::to_string(v) +
                               " vertices exceeds the bound of " + std::to_string(vertex_bound),
                           std::to_string(v));

    std::vector<SearchState> states(1);
    states[0].label.assign(static_cast<size_t>(v), 0);
    states[0].used.assign(static_cast<size_t>(n), 0);

    std::vector<std::vector<int>> emitted;
    emitted.reserve(static_cast<size_t>(n));

    std::vector<int> best;
    std::vector<int> img;
    for (int step = 0; step < n; ++step) {
        best.clear();
        std::vector<std::pair<size_t, int>> cands;  // (state index, facet index)
        for (size_t si = 0; si < states.size(); ++si) {
            const SearchState& s = states[si];
            for (int fi = 0; fi < n; ++fi) {
                if (s.used[static_cast<size_t>(fi)]) continue;
                img.clear();
                int fresh = s.next_label;
                for (int u : facets[static_cast<size_t>(fi)]) {
                    const int lab = s.label[static_cast<size_t>(u)];
                    img.push_back(lab ? lab : fresh++);
                }
                std::sort(img.begin(), img.end());
                if (best.empty() || img < best) {
                    best = img;
                    cands.clear();
                    cands.emplace_back(si, fi);
                } else if (img == best) {
                    cands.emplace_back(si, fi);
                }
            }
        }

        // Realize the minimal facet: branch over label assignments for the
        // facet's unassigned vertices, deduplicating resulting states.
        std::set<std::vector<int>> seen;
        std::vector<SearchState> next_states;
        for (const auto& [si, fi] : cands) {
            const SearchState& s = states[si];
            std::vector<int> unassigned;
            for (int u : facets[static_cast<size_t>(fi)])
                if (!s.label[static_cast<size_t>(u)]) unassigned.push_back(u);
            std::sort(unassigned.begin(), unassigned.end());
            do {
                SearchState t = s;
                for (int u : unassigned) t.label[static_cast<size_t>(u)] = t.next_label++;
                t.used[static_cast<size_t>(fi)] = 1;
                if (seen.insert(t.label).second) next_states.push_back(std::move(t));
            } while (std::next_permutation(unassigned.begin(), unassigned.end()));
        }
        emitted.push_back(best);
        states = std::move(next_states);
    }
    return emitted;
}

std::vector<Facet> canonical_form(const Complex3& c, int vertex_bound) {
    std::vector<std::vector<int>> in;
    in.reserve(c.facets().size());
    for (const Facet& f : c.facets()) in.emplace_back(f.begin(), f.end());
    const auto out = canonical_facets(in, vertex_bound);
    std::vector<Facet> result;
    result.reserve(out.size());
    for (const auto& f : out) result.push_back({f[0], f[1], f[2], f[3]});
    return result;
}

}  // namespace collapsar
