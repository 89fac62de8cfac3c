#include <benchmark/benchmark.h>

#include "collapsar/anneal.hpp"
#include "collapsar/catalog.hpp"
#include "collapsar/collapse.hpp"
#include "collapsar/estimate.hpp"
#include "collapsar/fixtures.hpp"
#include "collapsar/invariants.hpp"
#include "collapsar/spanning.hpp"

using namespace collapsar;

namespace {

void BM_WilsonMinimalSphere(benchmark::State& state) {
    const DualGraph g = dual_graph(boundary_4_simplex());
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(wilson_sample(g, seed++));
}
BENCHMARK(BM_WilsonMinimalSphere);

void BM_WilsonSphere15(benchmark::State& state) {
    const DualGraph g = dual_graph(complicated_sphere_15());
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(wilson_sample(g, seed++));
}
BENCHMARK(BM_WilsonSphere15);

// one full Bernoulli trial on the 15-vertex sphere (the sampling hot path)
void BM_TrialSphere15(benchmark::State& state) {
    TrialRunner runner(complicated_sphere_15());
    std::uint64_t seed = 0;
    bool acc = false;
    for (auto _ : state) acc ^= runner.run(seed++);
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_TrialSphere15);

// the same trial through the allocating reference path
void BM_TrialReferencePath(benchmark::State& state) {
    const Complex3 c = complicated_sphere_15();
    const DualGraph g = dual_graph(c);
    std::uint64_t seed = 0;
    bool acc = false;
    for (auto _ : state) {
        Rng rng(seed++);
        const SpanningTree t = wilson_sample(g, rng);
        const TwoComplex tc = collapse_along_tree(c, t);
        acc ^= greedy_collapse(tc, rng).collapsed_to_point;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_TrialReferencePath);

void BM_KirchhoffSphere15(benchmark::State& state) {
    const DualGraph g = dual_graph(complicated_sphere_15());
    for (auto _ : state) benchmark::DoNotOptimize(count_spanning_trees(g));
}
BENCHMARK(BM_KirchhoffSphere15);

void BM_EdgeVarianceSphere15(benchmark::State& state) {
    const Complex3 c = complicated_sphere_15();
    for (auto _ : state) benchmark::DoNotOptimize(edge_variance(c));
}
BENCHMARK(BM_EdgeVarianceSphere15);

void BM_CanonicalFormCatalogEntry(benchmark::State& state) {
    std::vector<std::vector<int>> tris;
    for (const Tri& t : load_catalog().front().triangles) tris.push_back({t[0], t[1], t[2]});
    for (auto _ : state) benchmark::DoNotOptimize(canonical_facets(tris));
}
BENCHMARK(BM_CanonicalFormCatalogEntry);

void BM_ScanSphere15(benchmark::State& state) {
    const Complex3 host = complicated_sphere_15();
    const TwoComplex pattern = load_catalog().front().to_complex();
    for (auto _ : state) benchmark::DoNotOptimize(find_embedding(pattern, host));
}
BENCHMARK(BM_ScanSphere15);

}  // namespace

BENCHMARK_MAIN();
