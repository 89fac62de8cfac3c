#ifndef COLLAPSAR_FIXTURES_HPP
#define COLLAPSAR_FIXTURES_HPP

#include "collapsar/complex.hpp"

namespace collapsar {

/// Boundary of the 4-simplex: the minimal 3-sphere, f-vector (5,10,10,5).
Complex3 boundary_4_simplex();

/// The 15-vertex 3-sphere with unusually low collapsing probability,
/// f-vector (15,105,180,90).
Complex3 complicated_sphere_15();

}  // namespace collapsar

#endif
