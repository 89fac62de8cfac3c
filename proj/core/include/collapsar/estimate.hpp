#ifndef COLLAPSAR_ESTIMATE_HPP
#define COLLAPSAR_ESTIMATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "collapsar/collapse.hpp"
#include "collapsar/complex.hpp"

namespace collapsar {

/// Monte Carlo estimate of the collapsing probability. Trial i draws its own
/// stream seeded with mix_seed(base_seed, i), so the result is independent of
/// worker count and scheduling.
struct Estimate {
    std::uint64_t successes = 0;
    std::uint64_t samples = 0;
    std::uint64_t base_seed = 0;

    double p_hat() const { return static_cast<double>(successes) / static_cast<double>(samples); }
    mpq_class p_hat_exact() const;

    /// Estimate JSON, schema:
    /// {"p_hat":..,"successes":..,"samples":..,"seed":..,
    ///  "chebyshev":{"epsilon":..,"bound":..},
    ///  "normal_approx":{"stddev":..,"halfwidth95":..}}
    std::string to_json_text(double chebyshev_epsilon = 0.005) const;
};

/// Worst-case Chebyshev tail bound: min(1, 1/(4 N epsilon^2)) on
/// P(|p_hat - p| >= epsilon), using p(1-p) <= 1/4.
double chebyshev_deviation_bound(std::uint64_t n_samples, double epsilon);

Estimate estimate_collapsing_probability(const Complex3& c, std::uint64_t n_samples,
                                         std::uint64_t base_seed, int workers = 1);

/// Trials for indices [first, first + count): supports streaming aggregation.
Estimate estimate_collapsing_probability_range(const Complex3& c, std::uint64_t first,
                                               std::uint64_t count, std::uint64_t base_seed,
                                               int workers = 1);

/// Exact collapsing probability by enumerating every spanning tree. The
/// denominator is the Kirchhoff count (not reduced).
struct ExactProbability {
    mpz_class numerator;
    mpz_class denominator;
    double value() const;
    mpq_class exact() const;
};

ExactProbability exact_collapsing_probability(const Complex3& c, std::uint64_t tree_limit);

/// Per-edge free frequencies in S_T over sampled trees, edges indexed as in
/// edge_table(c).
struct EdgeFreeStats {
    std::uint64_t samples = 0;
    std::uint64_t base_seed = 0;
    std::vector<Edge> edges;
    std::vector<int> degree;
    std::vector<std::uint64_t> free_count;

    double frequency(int edge_id) const {
        return static_cast<double>(free_count[static_cast<size_t>(edge_id)]) /
               static_cast<double>(samples);
    }
    /// CSV: edge_id,v1,v2,degree,free_count,samples,frequency,theorem_bound
    std::string to_csv() const;
};

EdgeFreeStats edge_free_frequencies(const Complex3& c, std::uint64_t n_samples,
                                    std::uint64_t base_seed, int workers = 1);

/// Lower bound (4/7) * (4/13)^(k-2) on the free-edge proportion for an edge
/// of degree k >= 2, as an exact rational.
mpq_class free_edge_lower_bound(int degree);

}  // namespace collapsar

#endif
