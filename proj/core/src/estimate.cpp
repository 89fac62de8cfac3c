#include "collapsar/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "collapsar/invariants.hpp"
#include "collapsar/spanning.hpp"

namespace collapsar {

mpq_class Estimate::p_hat_exact() const {
    mpq_class q(static_cast<unsigned long>(successes), static_cast<unsigned long>(samples));
    q.canonicalize();
    return q;
}

namespace {

std::string double_to_json(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string Estimate::to_json_text(double chebyshev_epsilon) const {
    const double p = p_hat();
    const double stddev = std::sqrt(p * (1 - p) / static_cast<double>(samples));
    std::ostringstream out;
    out << "{\"p_hat\":" << double_to_json(p) << ",\"successes\":" << successes
        << ",\"samples\":" << samples << ",\"seed\":" << base_seed << ",\"chebyshev\":{\"epsilon\":"
        << double_to_json(chebyshev_epsilon)
        << ",\"bound\":" << double_to_json(chebyshev_deviation_bound(samples, chebyshev_epsilon))
        << "},\"normal_approx\":{\"stddev\":" << double_to_json(stddev)
        << ",\"halfwidth95\":" << double_to_json(1.959963984540054 * stddev) << "}}";
    return out.str();
}

double chebyshev_deviation_bound(std::uint64_t n_samples, double epsilon) {
    if (n_samples == 0) throw DomainError("sample count must be positive");
    if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
    const double b = 1.0 / (4.0 * static_cast<double>(n_samples) * epsilon * epsilon);
    return std::min(1.0, b);
}

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs trials [first, first+count) split into contiguous chunks, one
// TrialRunner per worker; per-trial seeds make the outcome partition-proof.
template <typename PerTrial>
void run_trials(const Complex3& c, std::uint64_t first, std::uint64_t count,
                std::uint64_t base_seed, int workers, PerTrial&& per_trial) {
    workers = resolve_workers(workers);
    const std::uint64_t per =
        (count + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = first + per * static_cast<std::uint64_t>(w);
        const std::uint64_t hi = std::min(first + count, lo + per);
        if (lo >= hi) break;
        threads.emplace_back([&, w, lo, hi]() {
            try {
                TrialRunner runner(c);
                for (std::uint64_t i = lo; i < hi; ++i)
                    per_trial(w, i, runner, mix_seed(base_seed, i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

Estimate estimate_collapsing_probability_range(const Complex3& c, std::uint64_t first,
                                               std::uint64_t count, std::uint64_t base_seed,
                                               int workers) {
    if (count == 0) throw DomainError("sample count must be positive");
    require_closed_connected(c);
    workers = resolve_workers(workers);
    std::vector<std::uint64_t> hits(static_cast<size_t>(workers), 0);
    run_trials(c, first, count, base_seed, workers,
               [&](int w, std::uint64_t, TrialRunner& runner, std::uint64_t seed) {
                   if (runner.run(seed)) ++hits[static_cast<size_t>(w)];
               });
    Estimate e;
    e.samples = count;
    e.base_seed = base_seed;
    for (std::uint64_t h : hits) e.successes += h;
    return e;
}

Estimate estimate_collapsing_probability(const Complex3& c, std::uint64_t n_samples,
                                         std::uint64_t base_seed, int workers) {
    return estimate_collapsing_probability_range(c, 0, n_samples, base_seed, workers);
}

double ExactProbability::value() const { return mpq_class(exact()).get_d(); }

mpq_class ExactProbability::exact() const {
    if (denominator == 0) throw DomainError("empty tree set");
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return q;
}

ExactProbability exact_collapsing_probability(const Complex3& c, std::uint64_t tree_limit) {
    require_closed_connected(c);
    const DualGraph g = dual_graph(c);
    const TriangleTable tt = triangle_table(c);

    // Reuse the trial machinery on explicit trees: build S_T directly from the
    // tree arcs, then run the seeded greedy (the boolean is order-independent
    // for these inputs, so one fixed order seed suffices).
    std::vector<std::array<int, 3>> tris;
    tris.reserve(tt.triangles.size());
    for (const Tri& tr : tt.triangles) tris.push_back({tr[0], tr[1], tr[2]});
    const TwoComplex pristine = TwoComplex::from_triangles(tris);

    mpz_class collapsing = 0, total = 0;
    enumerate_spanning_trees(g, tree_limit, [&](const SpanningTree& t) {
        TwoComplex tc = pristine;
        for (int a : t.arcs) tc.remove_triangle(g.arc(a).triangle);
        Rng rng(12345);
        if (greedy_collapse(tc, rng).collapsed_to_point) ++collapsing;
        ++total;
        return true;
    });
    return ExactProbability{collapsing, total};
}

mpq_class free_edge_lower_bound(int degree) {
    if (degree < 2) throw DomainError("free-edge bound needs degree >= 2");
    mpq_class bound(4, 7);
    const mpq_class factor(4, 13);
    for (int k = 2; k < degree; ++k) bound *= factor;
    bound.canonicalize();
    return bound;
}

std::string EdgeFreeStats::to_csv() const {
    std::ostringstream out;
    out << "edge_id,v1,v2,degree,free_count,samples,frequency,theorem_bound\n";
    char buf[64];
    for (size_t e = 0; e < edges.size(); ++e) {
        std::snprintf(buf, sizeof buf, "%.6f",
                      static_cast<double>(free_count[e]) / static_cast<double>(samples));
        out << e << "," << edges[e][0] << "," << edges[e][1] << "," << degree[e] << ","
            << free_count[e] << "," << samples << "," << buf << ",";
        std::snprintf(buf, sizeof buf, "%.6f", free_edge_lower_bound(degree[e]).get_d());
        out << buf << "\n";
    }
    return out.str();
}

EdgeFreeStats edge_free_frequencies(const Complex3& c, std::uint64_t n_samples,
                                    std::uint64_t base_seed, int workers) {
    if (n_samples == 0) throw DomainError("sample count must be positive");
    require_closed_connected(c);
    workers = resolve_workers(workers);

    const EdgeTable et = edge_table(c);
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<size_t>(workers), std::vector<std::uint64_t>(et.edges.size(), 0));
    std::vector<std::vector<std::uint8_t>> scratch(static_cast<size_t>(workers));
    run_trials(c, 0, n_samples, base_seed, workers,
               [&](int w, std::uint64_t, TrialRunner& runner, std::uint64_t seed) {
                   auto& free_flags = scratch[static_cast<size_t>(w)];
                   runner.run_recording(seed, free_flags);
                   auto& cnt = counts[static_cast<size_t>(w)];
                   for (size_t e = 0; e < free_flags.size(); ++e) cnt[e] += free_flags[e];
               });

    EdgeFreeStats stats;
    stats.samples = n_samples;
    stats.base_seed = base_seed;
    stats.edges = et.edges;
    stats.degree = et.degree;
    stats.free_count.assign(et.edges.size(), 0);
    for (const auto& cnt : counts)
        for (size_t e = 0; e < cnt.size(); ++e) stats.free_count[e] += cnt[e];
    return stats;
}

}  // namespace collapsar
