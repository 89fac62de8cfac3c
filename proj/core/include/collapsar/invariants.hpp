#ifndef COLLAPSAR_INVARIANTS_HPP
#define COLLAPSAR_INVARIANTS_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "collapsar/collapse.hpp"
#include "collapsar/complex.hpp"

namespace collapsar {

/// Mean edge degree, exactly 6n/(n+v) for a closed 3-manifold.
mpq_class average_edge_degree(const Complex3& c);

/// Exact mean squared deviation of edge degrees from the average, plus the
/// degree histogram. All arithmetic is rational; floats appear only in the
/// JSON rendering.
struct VarianceReport {
    mpq_class average_degree;
    mpq_class variance;
    std::map<int, long long> degree_histogram;

    std::string to_json_text() const;  // exact num/den plus 5-place decimals
};

VarianceReport edge_variance(const Complex3& c);

/// Variance computed from a degree histogram alone (same formula).
VarianceReport edge_variance_from_histogram(const std::map<int, long long>& histogram);

/// Alternating face-count sum of the full closure of the given maximal faces.
long long euler_characteristic(const std::vector<std::vector<int>>& maximal_faces);
long long euler_characteristic(const Complex3& c);
long long euler_characteristic(const TwoComplex& tc);  // alive faces

/// Homology ranks over the two-element field.
struct F2Homology {
    std::vector<long long> betti;  // indices 0..dim
    long long alternating_sum() const;
};

F2Homology f2_homology(const std::vector<std::vector<int>>& maximal_faces);
F2Homology f2_homology(const Complex3& c);
F2Homology f2_homology(const TwoComplex& tc);

/// True iff every k-subset of vertices spans a face: f_{k-1} = C(v, k).
/// Only k = 2 and k = 3 are meaningful here.
bool is_k_neighbourly(const Complex3& c, int k);

/// Necessary size conditions for a minimal contractible non-collapsible
/// 2-complex: 3*f2 >= 2*f1 + 3 and f2 >= 2*f0 + 1 (over alive faces).
struct ObstructionBoundsReport {
    long long f0 = 0, f1 = 0, f2 = 0;
    bool triangles_vs_edges_ok = false;
    bool triangles_vs_vertices_ok = false;
    bool could_be_minimal_obstruction() const {
        return triangles_vs_edges_ok && triangles_vs_vertices_ok;
    }
};

ObstructionBoundsReport obstruction_size_bounds(const TwoComplex& tc);

/// Decimal rendering of a rational to `places` digits, round-half-away.
std::string rational_to_decimal(const mpq_class& q, int places);

}  // namespace collapsar

#endif
