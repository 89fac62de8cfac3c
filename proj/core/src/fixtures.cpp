#include "collapsar/fixtures.hpp"

#include "collapsar/catalog_data.hpp"

namespace collapsar {

Complex3 boundary_4_simplex() {
    return Complex3::from_facets(
        {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
}

Complex3 complicated_sphere_15() {
    std::vector<std::array<int, 4>> facets;
    facets.reserve(90);
    for (const auto& f : detail::kComplicatedSphere15Facets)
        facets.push_back({f[0], f[1], f[2], f[3]});
    return Complex3::from_facets(facets);
}

}  // namespace collapsar
