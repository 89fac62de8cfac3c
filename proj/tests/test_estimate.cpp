#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "collapsar/estimate.hpp"
#include "collapsar/fixtures.hpp"
#include "collapsar/spanning.hpp"
#include "testutil.hpp"

using namespace collapsar;

TEST_CASE("chebyshev_deviation_bound") {
    CHECK(chebyshev_deviation_bound(1000000, 0.005) == doctest::Approx(0.01));
    CHECK(chebyshev_deviation_bound(1, 10.0) == doctest::Approx(1.0 / 400.0));
    CHECK(chebyshev_deviation_bound(10, 0.0001) == 1.0);  // clamped
    CHECK_THROWS_AS(chebyshev_deviation_bound(1000, 0.0), DomainError);
    CHECK_THROWS_AS(chebyshev_deviation_bound(0, 0.1), DomainError);
}

TEST_CASE("free_edge_lower_bound") {
    CHECK(free_edge_lower_bound(2) == mpq_class(4, 7));
    CHECK(free_edge_lower_bound(3) == mpq_class(16, 91));
    CHECK(free_edge_lower_bound(4) == mpq_class(64, 1183));
    CHECK_THROWS_AS(free_edge_lower_bound(1), DomainError);
}

TEST_CASE("estimate: the minimal sphere always collapses") {
    const Estimate e = estimate_collapsing_probability(boundary_4_simplex(), 10000, 7, 2);
    CHECK(e.successes == 10000);
    CHECK(e.p_hat() == 1.0);
    CHECK(e.p_hat_exact() == 1);
}

TEST_CASE("estimate: zero samples rejected, invalid input rejected") {
    CHECK_THROWS_AS(estimate_collapsing_probability(boundary_4_simplex(), 0, 1), DomainError);
    CHECK_THROWS_AS(
        estimate_collapsing_probability(Complex3::from_facets({{1, 2, 3, 4}}), 10, 1),
        ValidationError);
}

TEST_CASE("estimate: worker count never changes the result") {
    const Complex3 c = complicated_sphere_15();
    const Estimate base = estimate_collapsing_probability(c, 4000, 123, 1);
    for (int workers : {2, 3, 5, 16}) {
        const Estimate e = estimate_collapsing_probability(c, 4000, 123, workers);
        CHECK(e.successes == base.successes);
        CHECK(e.samples == base.samples);
        CHECK(e.to_json_text() == base.to_json_text());
    }
}

TEST_CASE("estimate: streaming aggregation equals one long run") {
    const Complex3 c = testutil::moved_sphere(2, 3);
    const Estimate whole = estimate_collapsing_probability(c, 4000, 55, 2);
    const Estimate a = estimate_collapsing_probability_range(c, 0, 2500, 55, 2);
    const Estimate b = estimate_collapsing_probability_range(c, 2500, 1500, 55, 2);
    CHECK(whole.successes == a.successes + b.successes);
}

TEST_CASE("exact: minimal sphere is extendably collapsible") {
    const ExactProbability p = exact_collapsing_probability(boundary_4_simplex(), 1000);
    CHECK(p.numerator == 125);
    CHECK(p.denominator == 125);
    CHECK(p.exact() == 1);
}

TEST_CASE("exact: refusal and validation errors") {
    CHECK_THROWS_AS(exact_collapsing_probability(complicated_sphere_15(), 1000000),
                    RefusalError);
    CHECK_THROWS_AS(exact_collapsing_probability(Complex3::from_facets({{1, 2, 3, 4}}), 1000),
                    ValidationError);
}

TEST_CASE("oracle equivalence: estimate matches exact within 4 sigma on a small sphere") {
    const Complex3 c = testutil::moved_sphere(1, 17);
    const DualGraph g = dual_graph(c);
    const mpz_class count = count_spanning_trees(g).value;
    REQUIRE(count <= 10000);

    const ExactProbability exact = exact_collapsing_probability(c, 10000);
    const double p = exact.value();
    const std::uint64_t N = 100000;
    const Estimate e = estimate_collapsing_probability(c, N, 2718, 2);
    const double band = 4.0 * std::sqrt(p * (1 - p) / static_cast<double>(N)) + 1e-6;
    CHECK(std::abs(e.p_hat() - p) <= band);
}

TEST_CASE("edge_free_frequencies: exact symmetry on the minimal sphere") {
    const Complex3 c = boundary_4_simplex();

    // enumeration oracle: fraction of trees in which each edge is free in S_T
    const DualGraph g = dual_graph(c);
    const EdgeTable et = edge_table(c);
    const TriangleTable tt = triangle_table(c);
    std::vector<int> free_trees(static_cast<size_t>(et.size()), 0);
    int total = 0;
    enumerate_spanning_trees(g, 1000, [&](const SpanningTree& t) {
        ++total;
        std::vector<int> inc(static_cast<size_t>(et.size()), 0);
        std::vector<char> removed(static_cast<size_t>(tt.size()), 0);
        for (int a : t.arcs) removed[static_cast<size_t>(g.arc(a).triangle)] = 1;
        for (int ti = 0; ti < tt.size(); ++ti) {
            if (removed[static_cast<size_t>(ti)]) continue;
            const Tri& tr = tt.triangles[static_cast<size_t>(ti)];
            ++inc[static_cast<size_t>(et.index_of(tr[0], tr[1]))];
            ++inc[static_cast<size_t>(et.index_of(tr[0], tr[2]))];
            ++inc[static_cast<size_t>(et.index_of(tr[1], tr[2]))];
        }
        for (int e = 0; e < et.size(); ++e)
            if (inc[static_cast<size_t>(e)] == 1) ++free_trees[static_cast<size_t>(e)];
        return true;
    });
    CHECK(total == 125);
    for (int f : free_trees) CHECK(f == 45);  // 45/125 = 0.36 for every edge

    // sampled frequencies agree within 4 binomial sigma
    const std::uint64_t N = 100000;
    const EdgeFreeStats stats = edge_free_frequencies(c, N, 31337, 2);
    const double p = 45.0 / 125.0;
    const double band = 4.0 * std::sqrt(p * (1 - p) / static_cast<double>(N));
    for (size_t e = 0; e < stats.edges.size(); ++e)
        CHECK(std::abs(stats.frequency(static_cast<int>(e)) - p) <= band);
}

TEST_CASE("edge_free_frequencies: the degree bound holds with 3 sigma slack") {
    for (const Complex3& c : {boundary_4_simplex(), testutil::moved_sphere(2, 8)}) {
        const std::uint64_t N = 50000;
        const EdgeFreeStats stats = edge_free_frequencies(c, N, 11, 2);
        for (size_t e = 0; e < stats.edges.size(); ++e) {
            const double bound = free_edge_lower_bound(stats.degree[e]).get_d();
            const double sigma = std::sqrt(bound * (1 - bound) / static_cast<double>(N));
            CHECK(stats.frequency(static_cast<int>(e)) >= bound - 3 * sigma);
        }
    }
}

TEST_CASE("edge_free_frequencies: determinism across worker counts") {
    const Complex3 c = testutil::moved_sphere(1, 4);
    const EdgeFreeStats a = edge_free_frequencies(c, 3000, 99, 1);
    const EdgeFreeStats b = edge_free_frequencies(c, 3000, 99, 4);
    CHECK(a.free_count == b.free_count);
    CHECK(a.to_csv() == b.to_csv());
}

TEST_CASE("estimate JSON schema") {
    const Estimate e = estimate_collapsing_probability(boundary_4_simplex(), 100, 5);
    const std::string j = e.to_json_text(0.005);
    for (const char* key : {"\"p_hat\":", "\"successes\":", "\"samples\":", "\"seed\":",
                            "\"chebyshev\":", "\"epsilon\":", "\"bound\":", "\"normal_approx\":"})
        CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("edge stats CSV shape") {
    const Complex3 c = boundary_4_simplex();
    const EdgeFreeStats stats = edge_free_frequencies(c, 500, 1, 1);
    const std::string csv = stats.to_csv();
    CHECK(csv.rfind("edge_id,v1,v2,degree,free_count,samples,frequency,theorem_bound\n", 0) ==
          0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);  // header + 10 edges
}
