#include "collapsar/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "collapsar/catalog_data.hpp"
#include "collapsar/invariants.hpp"

namespace collapsar {

std::string family_name(ObstructionFamily f) {
    switch (f) {
        case ObstructionFamily::DunceHat: return "dunce-hat";
        case ObstructionFamily::SawBlade2: return "saw-blade-2";
        case ObstructionFamily::SawBlade3: return "saw-blade-3";
        case ObstructionFamily::SawBlade4: return "saw-blade-4";
        case ObstructionFamily::Unknown: return "unknown";
    }
    return "unknown";
}

TwoComplex ObstructionEntry::to_complex() const {
    std::vector<std::array<int, 3>> tris;
    tris.reserve(triangles.size());
    for (const Tri& t : triangles) tris.push_back({t[0], t[1], t[2]});
    return TwoComplex::from_triangles(tris);
}

namespace {

// FNV-1a over the raw vertex stream of all transcribed blocks, in shipping
// order. Guards the fixture data against accidental edits.
std::uint64_t catalog_checksum() {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](int v) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
    };
    for (const auto& block : detail::kSawBladeTriangles)
        for (const auto& tri : block)
            for (int v : tri) mix(v);
    for (const auto& block : detail::kDunceHatTriangles)
        for (const auto& tri : block)
            for (int v : tri) mix(v);
    return h;
}

constexpr std::uint64_t kExpectedCatalogChecksum = 0xabf32d102ef981bfull;

std::vector<ObstructionEntry> build_catalog() {
    if (catalog_checksum() != kExpectedCatalogChecksum)
        throw ValidationError("obstruction catalog data failed its checksum");

    std::vector<ObstructionEntry> entries;
    auto add = [&entries](const int (&block)[18][3], std::string name, ObstructionFamily fam) {
        ObstructionEntry e;
        e.name = std::move(name);
        e.family = fam;
        for (const auto& t : block) e.triangles.push_back({t[0], t[1], t[2]});
        entries.push_back(std::move(e));
    };

    // Saw-blade types I/II/III carry four, three and two blades respectively.
    static constexpr int kTypeISize = 3, kTypeIISize = 2;
    for (int i = 0; i < 19; ++i) {
        std::string name;
        ObstructionFamily fam;
        if (i < kTypeISize) {
            name = "sawblade-I-" + std::to_string(i + 1);
            fam = ObstructionFamily::SawBlade4;
        } else if (i < kTypeISize + kTypeIISize) {
            name = "sawblade-II-" + std::to_string(i - kTypeISize + 1);
            fam = ObstructionFamily::SawBlade3;
        } else {
            name = "sawblade-III-" + std::to_string(i - kTypeISize - kTypeIISize + 1);
            fam = ObstructionFamily::SawBlade2;
        }
        add(detail::kSawBladeTriangles[i], std::move(name), fam);
    }
    for (int i = 0; i < 61; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%02d", i + 1);
        add(detail::kDunceHatTriangles[i], std::string("duncehat-18-") + buf,
            ObstructionFamily::DunceHat);
    }

    // Deduplicate by canonical form (the listing is expected to be free of
    // isomorphic repeats; this keeps the contract explicit).
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<ObstructionEntry> unique_entries;
    for (auto& e : entries) {
        std::vector<std::vector<int>> tris;
        for (const Tri& t : e.triangles) tris.push_back({t[0], t[1], t[2]});
        if (seen.insert(canonical_facets(tris)).second)
            unique_entries.push_back(std::move(e));
    }
    return unique_entries;
}

}  // namespace

const std::vector<ObstructionEntry>& load_catalog() {
    static const std::vector<ObstructionEntry> catalog = build_catalog();
    return catalog;
}

ObstructionReport verify_obstruction(const TwoComplex& tc, int greedy_seeds) {
    ObstructionReport r;
    std::ostringstream detail;

    r.euler_ok = tc.euler_characteristic() == 1;
    if (!r.euler_ok) detail << "chi=" << tc.euler_characteristic() << " ";

    const F2Homology h = f2_homology(tc);
    r.betti_ok = h.betti.size() == 3 && h.betti[0] == 1 && h.betti[1] == 0 && h.betti[2] == 0;
    if (!r.betti_ok) {
        detail << "betti=(";
        for (size_t i = 0; i < h.betti.size(); ++i) detail << (i ? "," : "") << h.betti[i];
        detail << ") ";
    }

    r.greedy_stuck = true;
    for (int s = 0; s < greedy_seeds && r.greedy_stuck; ++s)
        if (greedy_collapse(tc, static_cast<std::uint64_t>(s)).collapsed_to_point)
            r.greedy_stuck = false;
    if (!r.greedy_stuck) detail << "collapsed-under-some-order ";

    std::map<int, long long> hist;
    for (size_t e = 0; e < tc.edges().size(); ++e)
        if (tc.edge_alive(static_cast<int>(e))) ++hist[tc.edge_incidence(static_cast<int>(e))];
    r.histogram_ok = hist.size() == 2 && hist.count(2) && hist.count(3) && hist[2] == 21 &&
                     hist[3] == 4;
    if (!r.histogram_ok) detail << "histogram-mismatch ";

    // the degree-3 edges must form a single closed 4-cycle
    std::vector<Edge> deg3;
    for (size_t e = 0; e < tc.edges().size(); ++e)
        if (tc.edge_alive(static_cast<int>(e)) && tc.edge_incidence(static_cast<int>(e)) == 3)
            deg3.push_back(tc.edges()[e]);
    r.cycle_ok = false;
    if (deg3.size() == 4) {
        std::map<int, int> deg;
        for (const Edge& e : deg3) {
            ++deg[e[0]];
            ++deg[e[1]];
        }
        bool all_two = deg.size() == 4;
        for (const auto& [v, d] : deg)
            if (d != 2) all_two = false;
        if (all_two) {
            // connected on 4 vertices with all degrees 2 => a single 4-cycle
            std::map<int, std::vector<int>> adj;
            for (const Edge& e : deg3) {
                adj[e[0]].push_back(e[1]);
                adj[e[1]].push_back(e[0]);
            }
            std::set<int> seen;
            std::vector<int> stack{deg3[0][0]};
            seen.insert(deg3[0][0]);
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int w : adj[u])
                    if (seen.insert(w).second) stack.push_back(w);
            }
            r.cycle_ok = seen.size() == 4;
        }
    }
    if (!r.cycle_ok) detail << "degree-3-edges-not-a-4-cycle ";

    const ObstructionBoundsReport b = obstruction_size_bounds(tc);
    r.size_bounds_ok = b.could_be_minimal_obstruction();
    if (!r.size_bounds_ok) detail << "size-bounds-fail ";

    r.detail = detail.str();
    return r;
}

namespace {

struct EmbeddingSearch {
    // pattern side, reindexed to assignment order
    std::vector<int> pattern_labels;            // order[i] -> original label
    std::vector<std::vector<int>> nbr_earlier;  // indices < i adjacent to i
    std::vector<std::vector<std::array<int, 3>>> tris_at;  // triangles completed at depth i
    // host side
    int host_v = 0;
    std::vector<std::vector<char>> host_adj;
    std::set<Tri> host_tris;

    std::vector<int> image;      // per depth: assigned host vertex (1-based)
    std::vector<char> host_used;

    std::size_t limit = 1;
    std::vector<EmbeddingResult>* out = nullptr;

    bool dfs(size_t depth) {
        if (depth == pattern_labels.size()) {
            EmbeddingResult r;
            r.found = true;
            for (size_t i = 0; i < pattern_labels.size(); ++i)
                r.vertex_map[pattern_labels[i]] = image[i];
            out->push_back(std::move(r));
            return limit != 0 && out->size() >= limit;
        }
        for (int h = 1; h <= host_v; ++h) {
            if (host_used[static_cast<size_t>(h)]) continue;
            bool ok = true;
            for (int j : nbr_earlier[depth])
                if (!host_adj[static_cast<size_t>(image[static_cast<size_t>(j)])]
                             [static_cast<size_t>(h)]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[depth] = h;
            for (const auto& t : tris_at[depth]) {
                Tri mapped{image[static_cast<size_t>(t[0])], image[static_cast<size_t>(t[1])],
                           image[static_cast<size_t>(t[2])]};
                std::sort(mapped.begin(), mapped.end());
                if (!host_tris.count(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            host_used[static_cast<size_t>(h)] = 1;
            const bool stop = dfs(depth + 1);
            host_used[static_cast<size_t>(h)] = 0;
            if (stop) return true;
        }
        return false;
    }
};

}  // namespace

std::vector<EmbeddingResult> find_embeddings(const TwoComplex& pattern, const Complex3& host,
                                             std::size_t limit) {
    std::vector<EmbeddingResult> results;
    if (static_cast<int>(pattern.vertices().size()) > host.vertex_count()) return results;

    EmbeddingSearch s;
    s.limit = limit;
    s.out = &results;

    // assignment order: decreasing pattern degree (edge count), ties by label
    const auto& verts = pattern.vertices();
    std::vector<int> order(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = pattern.vertex_incidence(a), db = pattern.vertex_incidence(b);
        if (da != db) return da > db;
        return verts[static_cast<size_t>(a)] < verts[static_cast<size_t>(b)];
    });
    std::vector<int> pos(verts.size());  // vertex index -> depth
    s.pattern_labels.resize(verts.size());
    for (size_t d = 0; d < order.size(); ++d) {
        pos[static_cast<size_t>(order[d])] = static_cast<int>(d);
        s.pattern_labels[d] = verts[static_cast<size_t>(order[d])];
    }

    s.nbr_earlier.resize(verts.size());
    for (const Edge& e : pattern.edges()) {
        const int a = pos[static_cast<size_t>(pattern.vertex_index(e[0]))];
        const int b = pos[static_cast<size_t>(pattern.vertex_index(e[1]))];
        s.nbr_earlier[static_cast<size_t>(std::max(a, b))].push_back(std::min(a, b));
    }
    s.tris_at.resize(verts.size());
    for (const Tri& t : pattern.triangles()) {
        std::array<int, 3> depths{pos[static_cast<size_t>(pattern.vertex_index(t[0]))],
                                  pos[static_cast<size_t>(pattern.vertex_index(t[1]))],
                                  pos[static_cast<size_t>(pattern.vertex_index(t[2]))]};
        const int last = *std::max_element(depths.begin(), depths.end());
        s.tris_at[static_cast<size_t>(last)].push_back(depths);
    }

    s.host_v = host.vertex_count();
    s.host_adj.assign(static_cast<size_t>(s.host_v) + 1,
                      std::vector<char>(static_cast<size_t>(s.host_v) + 1, 0));
    const EdgeTable et = edge_table(host);
    for (const Edge& e : et.edges) {
        s.host_adj[static_cast<size_t>(e[0])][static_cast<size_t>(e[1])] = 1;
        s.host_adj[static_cast<size_t>(e[1])][static_cast<size_t>(e[0])] = 1;
    }
    const TriangleTable tt = triangle_table(host);
    s.host_tris.insert(tt.triangles.begin(), tt.triangles.end());

    s.image.assign(verts.size(), 0);
    s.host_used.assign(static_cast<size_t>(s.host_v) + 1, 0);
    s.dfs(0);
    return results;
}

EmbeddingResult find_embedding(const TwoComplex& pattern, const Complex3& host) {
    const auto all = find_embeddings(pattern, host, 1);
    if (all.empty()) return EmbeddingResult{};
    return all.front();
}

ScanReport scan_for_obstructions(const Complex3& host) {
    ScanReport report;
    for (const ObstructionEntry& entry : load_catalog()) {
        EmbeddingResult r = find_embedding(entry.to_complex(), host);
        report.any_found = report.any_found || r.found;
        report.results.emplace_back(entry.name, std::move(r));
    }
    const int v = host.vertex_count();
    const int n = host.facet_count();
    if (v < 8 || n < 16) {
        report.certified_extendably_collapsible = true;
        report.basis = "v < 8 or n < 16: every collapse remainder is below the minimal "
                       "obstruction size";
    } else if (!report.any_found) {
        report.basis = "no 18-triangle obstruction embeds; not a certificate (17-triangle "
                       "obstructions are not in the catalog)";
    } else {
        report.basis = "obstruction embeddings found";
    }
    return report;
}

std::string ScanReport::to_json_text() const {
    std::ostringstream out;
    out << "{\"results\":[";
    for (size_t i = 0; i < results.size(); ++i) {
        if (i) out << ",";
        out << "{\"entry\":\"" << results[i].first << "\",\"found\":"
            << (results[i].second.found ? "true" : "false") << ",\"map\":{";
        bool first = true;
        for (const auto& [p, h] : results[i].second.vertex_map) {
            if (!first) out << ",";
            first = false;
            out << "\"" << p << "\":" << h;
        }
        out << "}}";
    }
    out << "],\"any_found\":" << (any_found ? "true" : "false")
        << ",\"certified_extendably_collapsible\":"
        << (certified_extendably_collapsible ? "true" : "false") << ",\"basis\":\"" << basis
        << "\"}";
    return out.str();
}

}  // namespace collapsar
