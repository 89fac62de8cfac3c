#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "collapsar/catalog.hpp"
#include "collapsar/invariants.hpp"
#include "testutil.hpp"

using namespace collapsar;

namespace {

// Independent embedding oracle: plain label-order DFS over injective vertex
// maps; the only pruning is checking each pattern triangle once its image is
// complete. No degree ordering, no edge-based pruning.
bool oracle_embed(const std::vector<Tri>& pattern_tris, const Complex3& host) {
    std::set<int> pv_set;
    for (const Tri& t : pattern_tris)
        for (int v : t) pv_set.insert(v);
    const int pv = *pv_set.rbegin();
    const int hv = host.vertex_count();
    if (static_cast<int>(pv_set.size()) > hv) return false;

    const TriangleTable tt = triangle_table(host);
    std::set<Tri> host_tris(tt.triangles.begin(), tt.triangles.end());

    std::vector<std::vector<Tri>> at(static_cast<size_t>(pv) + 1);
    for (const Tri& t : pattern_tris)
        at[static_cast<size_t>(std::max({t[0], t[1], t[2]}))].push_back(t);

    std::vector<int> img(static_cast<size_t>(pv) + 1, 0);
    std::vector<char> used(static_cast<size_t>(hv) + 1, 0);
    std::function<bool(int)> dfs = [&](int p) -> bool {
        if (p > pv) return true;
        for (int h = 1; h <= hv; ++h) {
            if (used[static_cast<size_t>(h)]) continue;
            img[static_cast<size_t>(p)] = h;
            used[static_cast<size_t>(h)] = 1;
            bool ok = true;
            for (const Tri& t : at[static_cast<size_t>(p)]) {
                Tri m{img[static_cast<size_t>(t[0])], img[static_cast<size_t>(t[1])],
                      img[static_cast<size_t>(t[2])]};
                std::sort(m.begin(), m.end());
                if (!host_tris.count(m)) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(p + 1)) return true;
            used[static_cast<size_t>(h)] = 0;
        }
        return false;
    };
    return dfs(1);
}

}  // namespace

TEST_CASE("load_catalog: 19 saw-blades plus 61 dunce hats, all 8 vertices 18 triangles") {
    const auto& catalog = load_catalog();
    REQUIRE(catalog.size() == 80);

    int saw = 0, dunce = 0;
    for (const ObstructionEntry& e : catalog) {
        CHECK(e.triangles.size() == 18);
        std::set<int> verts;
        for (const Tri& t : e.triangles)
            for (int v : t) verts.insert(v);
        CHECK(verts == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});
        if (e.family == ObstructionFamily::DunceHat)
            ++dunce;
        else
            ++saw;
    }
    CHECK(saw == 19);
    CHECK(dunce == 61);

    CHECK(catalog.front().name == "sawblade-I-1");
    CHECK(catalog.front().triangles.front() == Tri{1, 2, 3});
    CHECK(catalog.front().triangles.back() == Tri{5, 6, 8});
    CHECK(catalog[3].name == "sawblade-II-1");
    CHECK(catalog[5].name == "sawblade-III-1");
    CHECK(catalog[19].name == "duncehat-18-01");
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
    std::set<std::vector<std::vector<int>>> canon;
    for (const ObstructionEntry& e : load_catalog()) {
        std::vector<std::vector<int>> tris;
        for (const Tri& t : e.triangles) tris.push_back({t[0], t[1], t[2]});
        canon.insert(canonical_facets(tris));
    }
    CHECK(canon.size() == load_catalog().size());
}

TEST_CASE("first two saw-blades of the same type are distinct") {
    std::vector<std::vector<int>> a, b;
    for (const Tri& t : load_catalog()[0].triangles) a.push_back({t[0], t[1], t[2]});
    for (const Tri& t : load_catalog()[1].triangles) b.push_back({t[0], t[1], t[2]});
    CHECK(canonical_facets(a) != canonical_facets(b));
}

TEST_CASE("verify_obstruction: every catalog entry passes (100 orders here)") {
    for (const ObstructionEntry& e : load_catalog()) {
        const ObstructionReport r = verify_obstruction(e.to_complex(), 100);
        INFO(e.name, " ", r.detail);
        CHECK(r.pass());
    }
}

TEST_CASE("verify_obstruction: negatives") {
    // 2-sphere: wrong Euler characteristic
    const TwoComplex sphere =
        TwoComplex::from_triangles({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    const ObstructionReport r1 = verify_obstruction(sphere, 10);
    CHECK_FALSE(r1.euler_ok);
    CHECK_FALSE(r1.pass());

    // collapsible disk: greedy succeeds
    const TwoComplex disk = TwoComplex::from_triangles({{1, 2, 3}, {2, 3, 4}});
    const ObstructionReport r2 = verify_obstruction(disk, 10);
    CHECK_FALSE(r2.greedy_stuck);
    CHECK_FALSE(r2.pass());
}

TEST_CASE("find_embedding: pattern from the host's own 2-skeleton") {
    const Complex3 host = boundary_4_simplex();
    const TwoComplex pattern =
        TwoComplex::from_triangles({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    const EmbeddingResult r = find_embedding(pattern, host);
    REQUIRE(r.found);
    // replay: every mapped triangle lies in the host 2-skeleton
    const TriangleTable tt = triangle_table(host);
    for (const Tri& t : pattern.triangles()) {
        Tri m{r.vertex_map.at(t[0]), r.vertex_map.at(t[1]), r.vertex_map.at(t[2])};
        std::sort(m.begin(), m.end());
        CHECK(tt.index_of(m) >= 0);
    }
}

TEST_CASE("find_embedding: more pattern vertices than host vertices") {
    std::vector<std::array<int, 3>> tris;
    for (int i = 1; i <= 7; ++i) tris.push_back({i, i + 1, i + 2});  // 9 vertices
    const TwoComplex pattern = TwoComplex::from_triangles(tris);
    CHECK_FALSE(find_embedding(pattern, testutil::moved_sphere(1, 1)).found);
}

TEST_CASE("find_embedding agrees with the unpruned oracle on small hosts") {
    const std::vector<Complex3> hosts{boundary_4_simplex(), testutil::moved_sphere(1, 5),
                                      testutil::moved_sphere(2, 5)};
    // patterns: a few catalog entries and two small complexes
    std::vector<std::vector<Tri>> patterns;
    patterns.push_back(load_catalog()[0].triangles);
    patterns.push_back(load_catalog()[40].triangles);
    patterns.push_back({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    patterns.push_back({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    for (const Complex3& host : hosts) {
        for (const auto& tris : patterns) {
            std::vector<std::array<int, 3>> t3;
            for (const Tri& t : tris) t3.push_back({t[0], t[1], t[2]});
            const bool impl = find_embedding(TwoComplex::from_triangles(t3), host).found;
            CHECK(impl == oracle_embed(tris, host));
        }
    }
}

TEST_CASE("find_embedding vs oracle: full catalog against the 15-vertex sphere") {
    const Complex3 host = complicated_sphere_15();
    for (const ObstructionEntry& e : load_catalog()) {
        const EmbeddingResult r = find_embedding(e.to_complex(), host);
        CHECK(r.found == oracle_embed(e.triangles, host));
        CHECK_FALSE(r.found);  // frozen golden: no catalog entry embeds
    }
}

TEST_CASE("find_embeddings: enumeration honors the limit and replays") {
    const Complex3 host = boundary_4_simplex();
    const TwoComplex pattern = TwoComplex::from_triangles({{1, 2, 3}});
    const auto all = find_embeddings(pattern, host, 0);
    CHECK(all.size() == 60);  // 10 triangles, 6 labelings each
    const auto capped = find_embeddings(pattern, host, 7);
    CHECK(capped.size() == 7);
}

TEST_CASE("scan_for_obstructions: certification logic") {
    const ScanReport small = scan_for_obstructions(boundary_4_simplex());
    CHECK_FALSE(small.any_found);
    CHECK(small.certified_extendably_collapsible);  // v < 8 and n < 16

    // 7-vertex sphere: no 8-vertex pattern can embed, certificate still holds
    const Complex3 seven = testutil::moved_sphere(2, 42);
    REQUIRE(seven.vertex_count() == 7);
    const ScanReport s7 = scan_for_obstructions(seven);
    CHECK_FALSE(s7.any_found);
    CHECK(s7.certified_extendably_collapsible);

    const ScanReport big = scan_for_obstructions(complicated_sphere_15());
    CHECK_FALSE(big.any_found);
    CHECK_FALSE(big.certified_extendably_collapsible);  // coverage gap: n >= 16
    CHECK(big.basis.find("not a certificate") != std::string::npos);

    const std::string json = big.to_json_text();
    CHECK(json.find("\"entry\":\"sawblade-I-1\"") != std::string::npos);
    CHECK(json.find("\"found\":false") != std::string::npos);
}
