#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "collapsar/catalog.hpp"
#include "collapsar/collapse.hpp"
#include "collapsar/invariants.hpp"
#include "collapsar/spanning.hpp"
#include "testutil.hpp"

using namespace collapsar;

namespace {

std::vector<std::vector<int>> tetrahedron_boundary_faces() {
    return {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
}

}  // namespace

TEST_CASE("average_edge_degree") {
    CHECK(average_edge_degree(boundary_4_simplex()) == 3);
    CHECK(average_edge_degree(complicated_sphere_15()) == mpq_class(36, 7));  // 540/105
}

TEST_CASE("edge_variance: constant degrees give zero") {
    const VarianceReport r = edge_variance(boundary_4_simplex());
    CHECK(r.variance == 0);
    CHECK(r.average_degree == 3);
    CHECK(r.degree_histogram == std::map<int, long long>{{3, 10}});
}

TEST_CASE("edge_variance: 15-vertex sphere frozen value, with recount oracle") {
    const Complex3 c = complicated_sphere_15();

    // independent recount: degrees straight from the facet list
    std::map<Edge, int> deg;
    for (const Facet& f : c.facets())
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                ++deg[{f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]}];
    REQUIRE(deg.size() == 105);
    mpq_class avg(6 * 90, 105);
    avg.canonicalize();
    mpq_class acc = 0;
    for (const auto& [e, d] : deg) {
        mpq_class diff = avg - d;
        acc += diff * diff;
    }
    acc /= 105;
    acc.canonicalize();

    const VarianceReport r = edge_variance(c);
    CHECK(r.variance == acc);
    CHECK(r.variance == mpq_class(944, 735));  // frozen golden
    CHECK(rational_to_decimal(r.variance, 5) == "1.28435");
}

TEST_CASE("edge_variance: histogram route agrees with the edge route") {
    for (const Complex3& c : {boundary_4_simplex(), complicated_sphere_15(),
                              testutil::moved_sphere(2, 6)}) {
        const VarianceReport a = edge_variance(c);
        const VarianceReport b = edge_variance_from_histogram(a.degree_histogram);
        CHECK(a.variance == b.variance);
        CHECK(a.average_degree == b.average_degree);
    }
    // histogram 3^10 5^30: n = 30, v = 10, average 4.5, variance 3/4
    const VarianceReport h = edge_variance_from_histogram({{3, 10}, {5, 30}});
    CHECK(h.average_degree == mpq_class(9, 2));
    CHECK(h.variance == mpq_class(3, 4));
}

TEST_CASE("edge_variance: invariant under relabeling") {
    Rng rng(404);
    for (const Complex3& c : {boundary_4_simplex(), testutil::moved_sphere(2, 12)}) {
        const mpq_class base = edge_variance(c).variance;
        for (int rep = 0; rep < 100; ++rep) {
            const auto perm = testutil::random_permutation(c.vertex_count(), rng);
            CHECK(edge_variance(testutil::relabel(c, perm)).variance == base);
        }
    }
}

TEST_CASE("average degree times edge count equals 6n exactly") {
    for (const Complex3& c : {boundary_4_simplex(), complicated_sphere_15(),
                              testutil::moved_sphere(3, 1)}) {
        const FVector fv = f_vector(c);
        CHECK(average_edge_degree(c) * static_cast<long>(fv.f3 + fv.f0) ==
              static_cast<long>(6 * fv.f3));
    }
}

TEST_CASE("euler_characteristic") {
    CHECK(euler_characteristic(boundary_4_simplex()) == 0);
    CHECK(euler_characteristic(complicated_sphere_15()) == 0);
    CHECK(euler_characteristic(tetrahedron_boundary_faces()) == 2);  // 2-sphere
    for (const ObstructionEntry& e : load_catalog())
        CHECK(euler_characteristic(e.to_complex()) == 1);
}

TEST_CASE("f2_homology: spheres and contractible complexes") {
    const F2Homology s2 = f2_homology(tetrahedron_boundary_faces());
    CHECK(s2.betti == std::vector<long long>{1, 0, 1});

    for (const Complex3& c : {boundary_4_simplex(), complicated_sphere_15()}) {
        const F2Homology h = f2_homology(c);
        CHECK(h.betti == std::vector<long long>{1, 0, 0, 1});
        CHECK(h.alternating_sum() == euler_characteristic(c));
    }

    for (const ObstructionEntry& e : load_catalog()) {
        const F2Homology h = f2_homology(e.to_complex());
        CHECK(h.betti == std::vector<long long>{1, 0, 0});
        CHECK(h.alternating_sum() == 1);
    }
}

TEST_CASE("f2_homology: betti alternating sum equals chi on collapse remainders") {
    Rng rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        const Complex3 c = testutil::moved_sphere(1 + rep % 3, 900 + static_cast<unsigned>(rep));
        const TwoComplex tc = collapse_along_tree(c, wilson_sample(dual_graph(c), rng));
        const F2Homology h = f2_homology(tc);
        CHECK(h.alternating_sum() == euler_characteristic(tc));
    }
}

TEST_CASE("is_k_neighbourly") {
    CHECK(is_k_neighbourly(boundary_4_simplex(), 2));
    CHECK(is_k_neighbourly(boundary_4_simplex(), 3));  // all C(5,3) triangles present
    CHECK(is_k_neighbourly(complicated_sphere_15(), 2));   // 105 = C(15,2)
    CHECK_FALSE(is_k_neighbourly(complicated_sphere_15(), 3));  // 180 < C(15,3)
    CHECK_FALSE(is_k_neighbourly(testutil::moved_sphere(1, 1), 2));
    CHECK_THROWS_AS(is_k_neighbourly(boundary_4_simplex(), 4), DomainError);
}

TEST_CASE("obstruction_size_bounds") {
    for (const ObstructionEntry& e : load_catalog()) {
        const ObstructionBoundsReport r = obstruction_size_bounds(e.to_complex());
        CHECK(r.f0 == 8);
        CHECK(r.f2 == 18);
        CHECK(r.could_be_minimal_obstruction());
    }

    // a tree-collapse of the minimal sphere is far below the bounds
    const Complex3 c = boundary_4_simplex();
    const TwoComplex tc = collapse_along_tree(c, wilson_sample(dual_graph(c), 3));
    const ObstructionBoundsReport r = obstruction_size_bounds(tc);
    CHECK(r.f2 == 6);
    CHECK_FALSE(r.triangles_vs_vertices_ok);  // 6 < 2*5 + 1
    CHECK_FALSE(r.could_be_minimal_obstruction());

    const ObstructionBoundsReport single =
        obstruction_size_bounds(TwoComplex::from_triangles({{1, 2, 3}}));
    CHECK_FALSE(single.could_be_minimal_obstruction());
}

TEST_CASE("catalog entries: degree histogram {2:21, 3:4} and a degree-3 4-cycle") {
    for (const ObstructionEntry& e : load_catalog()) {
        const TwoComplex tc = e.to_complex();
        std::map<int, int> hist;
        std::vector<Edge> deg3;
        for (size_t ei = 0; ei < tc.edges().size(); ++ei) {
            ++hist[tc.edge_incidence(static_cast<int>(ei))];
            if (tc.edge_incidence(static_cast<int>(ei)) == 3) deg3.push_back(tc.edges()[ei]);
        }
        CHECK(hist == std::map<int, int>{{2, 21}, {3, 4}});
        REQUIRE(deg3.size() == 4);
        std::map<int, int> vdeg;
        for (const Edge& e2 : deg3) {
            ++vdeg[e2[0]];
            ++vdeg[e2[1]];
        }
        CHECK(vdeg.size() == 4);  // a closed 4-cycle: 4 vertices, all of degree 2
        for (const auto& [v, d] : vdeg) CHECK(d == 2);
    }
}

TEST_CASE("rational_to_decimal") {
    CHECK(rational_to_decimal(mpq_class(1, 3), 5) == "0.33333");
    CHECK(rational_to_decimal(mpq_class(2, 3), 5) == "0.66667");
    CHECK(rational_to_decimal(mpq_class(-1, 8), 3) == "-0.125");
    CHECK(rational_to_decimal(mpq_class(125, 125), 5) == "1.00000");
}
