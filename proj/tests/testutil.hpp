#ifndef COLLAPSAR_TESTUTIL_HPP
#define COLLAPSAR_TESTUTIL_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "collapsar/anneal.hpp"
#include "collapsar/complex.hpp"
#include "collapsar/fixtures.hpp"
#include "collapsar/rng.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(COLLAPSAR_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline collapsar::Complex3 load_fixture(const std::string& name) {
    return collapsar::Complex3::parse(read_file(fixture_path(name)));
}

// -- small graphs ------------------------------------------------------------

inline collapsar::DualGraph complete_graph(int n) {
    std::vector<collapsar::DualArc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.push_back({i, j, -1});
    return collapsar::DualGraph(n, std::move(arcs));
}

inline collapsar::DualGraph cycle_graph(int n) {
    std::vector<collapsar::DualArc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, -1});
    return collapsar::DualGraph(n, std::move(arcs));
}

// -- statistics --------------------------------------------------------------

// Upper chi-square quantile via the Wilson-Hilferty cube approximation;
// plenty accurate for the large degrees of freedom used here.
inline double chi_square_critical(int df, double upper_tail) {
    // z for the standard normal upper tail (only the values used in tests)
    double z;
    if (upper_tail == 0.001)
        z = 3.090232306167814;
    else if (upper_tail == 0.01)
        z = 2.3263478740408408;
    else if (upper_tail == 0.05)
        z = 1.6448536269514722;
    else
        throw std::invalid_argument("unsupported tail");
    const double a = 2.0 / (9.0 * df);
    const double t = 1.0 - a + z * std::sqrt(a);
    return df * t * t * t;
}

// -- relabeling --------------------------------------------------------------

inline collapsar::Complex3 relabel(const collapsar::Complex3& c, const std::vector<int>& perm) {
    std::vector<std::array<int, 4>> facets;
    for (const collapsar::Facet& f : c.facets())
        facets.push_back({perm[static_cast<size_t>(f[0] - 1)],
                          perm[static_cast<size_t>(f[1] - 1)],
                          perm[static_cast<size_t>(f[2] - 1)],
                          perm[static_cast<size_t>(f[3] - 1)]});
    return collapsar::Complex3::from_facets(facets);
}

inline std::vector<int> random_permutation(int n, collapsar::Rng& rng) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<size_t>(i)],
                  p[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    return p;
}

// A sphere obtained from the boundary of the 4-simplex by `k` random 1-4
// moves (seed-deterministic).
inline collapsar::Complex3 moved_sphere(int k, std::uint64_t seed) {
    collapsar::Complex3 c = collapsar::boundary_4_simplex();
    collapsar::Rng rng(seed);
    for (int i = 0; i < k; ++i) {
        const auto& facets = c.facets();
        const collapsar::Facet f =
            facets[static_cast<size_t>(rng.below(facets.size()))];
        c = collapsar::apply_move(c, {collapsar::MoveKind::Move14, {f[0], f[1], f[2], f[3]}});
    }
    return c;
}

}  // namespace testutil

#endif
