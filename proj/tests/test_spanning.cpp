#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "collapsar/fixtures.hpp"
#include "collapsar/spanning.hpp"
#include "testutil.hpp"

using namespace collapsar;

TEST_CASE("count_spanning_trees: small closed forms") {
    CHECK(count_spanning_trees(testutil::complete_graph(5)).value == 125);  // Cayley 5^3
    CHECK(count_spanning_trees(testutil::cycle_graph(4)).value == 4);
    CHECK(count_spanning_trees(DualGraph(2, {{0, 1, -1}})).value == 1);
    // parallel arcs count separately
    CHECK(count_spanning_trees(DualGraph(2, {{0, 1, -1}, {0, 1, -1}})).value == 2);
    // disconnected graphs have no spanning tree
    CHECK(count_spanning_trees(DualGraph(3, {{0, 1, -1}})).value == 0);
}

TEST_CASE("enumerate_spanning_trees: exact, distinct, deterministic") {
    const DualGraph k5 = testutil::complete_graph(5);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> order;
    enumerate_spanning_trees(k5, 1000, [&](const SpanningTree& t) {
        CHECK(is_spanning_tree(k5, t));
        seen.insert(t.arcs);
        order.push_back(t.arcs);
        return true;
    });
    CHECK(seen.size() == 125);
    CHECK(order.size() == 125);
    // include-first recursion on the lowest-indexed arc: the first tree uses
    // arcs 0,1,2,3 = star at node 0
    CHECK(order.front() == std::vector<int>{0, 1, 2, 3});

    std::vector<std::vector<int>> order2;
    enumerate_spanning_trees(k5, 1000, [&](const SpanningTree& t) {
        order2.push_back(t.arcs);
        return true;
    });
    CHECK(order == order2);
}

TEST_CASE("enumerate_spanning_trees: cycle and early stop") {
    const DualGraph c4 = testutil::cycle_graph(4);
    int n = 0;
    enumerate_spanning_trees(c4, 100, [&](const SpanningTree&) {
        ++n;
        return true;
    });
    CHECK(n == 4);

    n = 0;
    enumerate_spanning_trees(c4, 100, [&](const SpanningTree&) { return ++n < 2; });
    CHECK(n == 2);
}

TEST_CASE("enumerate_spanning_trees: refusal over the limit, with the count") {
    const DualGraph g = dual_graph(complicated_sphere_15());
    const TreeCount count = count_spanning_trees(g);
    CHECK(count.value > 1000000);
    try {
        enumerate_spanning_trees(g, 1000000, [](const SpanningTree&) { return true; });
        FAIL("expected refusal");
    } catch (const RefusalError& e) {
        CHECK(e.count == count.value.get_str());
    }
}

TEST_CASE("enumeration count always matches the Kirchhoff count") {
    for (const DualGraph& g :
         {testutil::complete_graph(4), testutil::complete_graph(5), testutil::cycle_graph(6),
          dual_graph(boundary_4_simplex()), dual_graph(testutil::moved_sphere(1, 9))}) {
        std::uint64_t n = 0;
        enumerate_spanning_trees(g, 1u << 20, [&](const SpanningTree&) {
            ++n;
            return true;
        });
        CHECK(count_spanning_trees(g).value == static_cast<unsigned long>(n));
    }
}

TEST_CASE("wilson_sample: tree contract and seed determinism") {
    const DualGraph k5 = testutil::complete_graph(5);
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xDEADBEEFull}) {
        const SpanningTree t = wilson_sample(k5, seed);
        CHECK(t.arcs.size() == 4);
        CHECK(is_spanning_tree(k5, t));
        const SpanningTree t2 = wilson_sample(k5, seed);
        CHECK(t.arcs == t2.arcs);
        CHECK(t.root == t2.root);
    }

    const DualGraph two(2, {{0, 1, -1}});
    for (std::uint64_t seed = 0; seed < 16; ++seed)
        CHECK(wilson_sample(two, seed).arcs == std::vector<int>{0});
}

TEST_CASE("wilson_sample: disconnected input is rejected") {
    const DualGraph disc(4, {{0, 1, -1}, {2, 3, -1}});
    CHECK_THROWS_AS(wilson_sample(disc, 7), ValidationError);
}

TEST_CASE("wilson_sample on dual graphs keeps the spanning-tree invariants") {
    const DualGraph g = dual_graph(complicated_sphere_15());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const SpanningTree t = wilson_sample(g, seed);
        CHECK(t.arcs.size() == 89);
        CHECK(is_spanning_tree(g, t));
    }
}

TEST_CASE("wilson_sample: uniform over the 125 trees of K5 (chi-square)") {
    const DualGraph k5 = testutil::complete_graph(5);
    std::map<std::vector<int>, int> index;
    enumerate_spanning_trees(k5, 1000, [&](const SpanningTree& t) {
        const int id = static_cast<int>(index.size());
        index[t.arcs] = id;
        return true;
    });
    REQUIRE(index.size() == 125);

    const int N = 1000000;
    std::vector<int> observed(125, 0);
    for (int i = 0; i < N; ++i) {
        const SpanningTree t = wilson_sample(k5, mix_seed(99, static_cast<std::uint64_t>(i)));
        ++observed[static_cast<size_t>(index.at(t.arcs))];
    }
    const double expected = static_cast<double>(N) / 125.0;
    double stat = 0;
    for (int o : observed) stat += (o - expected) * (o - expected) / expected;
    CHECK(stat < testutil::chi_square_critical(124, 0.001));
}

TEST_CASE("wilson_sample: uniform over the 4 trees of a 4-cycle") {
    const DualGraph c4 = testutil::cycle_graph(4);
    std::vector<int> observed(4, 0);
    const int N = 100000;
    for (int i = 0; i < N; ++i) {
        const SpanningTree t = wilson_sample(c4, mix_seed(7, static_cast<std::uint64_t>(i)));
        // the missing arc identifies the tree
        std::set<int> all{0, 1, 2, 3};
        for (int a : t.arcs) all.erase(a);
        ++observed[static_cast<size_t>(*all.begin())];
    }
    const double expected = N / 4.0;
    double stat = 0;
    for (int o : observed) stat += (o - expected) * (o - expected) / expected;
    CHECK(stat < testutil::chi_square_critical(3, 0.001));
}

TEST_CASE("tree counts respect the 4-regular upper bound (9/2)(27/8)^n") {
    for (const Complex3& c : {boundary_4_simplex(), testutil::moved_sphere(1, 2),
                              testutil::moved_sphere(2, 4), complicated_sphere_15()}) {
        const DualGraph g = dual_graph(c);
        const mpz_class count = count_spanning_trees(g).value;
        const unsigned long n = static_cast<unsigned long>(g.node_count());
        mpz_class p27, p8;
        mpz_ui_pow_ui(p27.get_mpz_t(), 27, n);
        mpz_ui_pow_ui(p8.get_mpz_t(), 8, n);
        // count < (9/2)(27/8)^n  <=>  2 * 8^n * count < 9 * 27^n
        CHECK(2 * p8 * count < 9 * p27);
    }
}
