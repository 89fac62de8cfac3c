#ifndef COLLAPSAR_CATALOG_DATA_HPP
#define COLLAPSAR_CATALOG_DATA_HPP

namespace collapsar::detail {

// Raw fixture data; see catalog.hpp / fixtures.hpp for the typed accessors.
extern const int kSawBladeTriangles[19][18][3];
extern const int kDunceHatTriangles[61][18][3];
extern const int kComplicatedSphere15Facets[90][4];

}  // namespace collapsar::detail

#endif
