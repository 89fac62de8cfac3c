#include "collapsar/catalog_data.hpp"

namespace collapsar::detail {

// Saw-blade complexes: entries 0-2 four-blade, 3-4 three-blade, 5-18 two-blade.
const int kSawBladeTriangles[19][18][3] = {
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,7},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,7},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,7},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,7,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,8},{2,4,7},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,6},{1,5,7},{2,3,6},{2,4,7},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,5,8},{4,5,6},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,6},{1,5,8},{1,7,8},{2,3,6},{2,4,7},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,5,8},{4,5,6}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,6},{2,5,7},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,8},{5,6,7},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,6},{2,5,7},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,8},{5,7,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,6},{2,5,8},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,8},{2,5,8},{2,6,7},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,5},{2,6,7},{2,7,8},{3,4,6},{3,4,7},{3,4,8},{3,5,7},{4,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,5},{2,6,8},{3,4,6},{3,4,7},{3,4,8},{3,5,7},{4,5,8},{5,6,7},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,5},{2,6,8},{3,4,6},{3,4,7},{3,4,8},{3,5,7},{4,5,8},{5,7,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,7},{2,4,6},{2,5,7},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,7},{2,4,6},{2,5,8},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,8},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,6},{1,5,7},{2,3,8},{2,4,6},{2,4,7},{2,5,8},{2,6,7},{3,4,5},{3,4,7},{3,4,8},{3,5,6},{4,5,8},{5,6,7}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,4,6},{1,4,7},{1,4,8},{1,7,8},{2,3,7},{2,3,8},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,7},{3,6,8},{4,5,8},{5,6,8}},
};

const int kDunceHatTriangles[61][18][3] = {
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,6},{2,3,6},{2,4,7},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,7},{3,4,8},{3,7,8},{4,5,6},{5,6,7},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,7},{2,5,6},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,8},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,7},{2,5,6},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,8},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,7},{2,5,8},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,7},{4,5,8},{5,6,7},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,7},{4,5,8},{5,7,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,7},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,6},{5,6,7}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{5,6,7},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{5,7,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,7},{2,4,8},{2,5,6},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,6},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,6},{2,3,6},{2,4,7},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,7},{3,4,8},{3,7,8},{4,5,6},{5,6,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,7},{2,4,8},{2,5,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,6},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,7},{2,4,7},{2,4,8},{2,5,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,6},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,8},{2,4,6},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,8},{2,4,6},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,8},{2,4,6},{2,4,7},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,7},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,8},{2,4,6},{2,4,7},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,7,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,4,6},{2,4,8},{2,5,8},{3,4,5},{3,4,7},{3,4,8},{3,7,8},{4,5,6},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,7},{2,4,6},{2,4,7},{2,5,6},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,8},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,7},{2,4,6},{2,4,7},{2,5,8},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,7},{4,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,6},{2,3,7},{2,4,6},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,7},{5,6,7},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,7}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,7},{2,4,6},{2,4,8},{2,5,7},{2,6,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,7},{2,4,7},{2,4,8},{2,5,6},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,6}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,7},{2,4,7},{2,4,8},{2,5,8},{3,4,5},{3,4,6},{3,4,8},{3,7,8},{4,5,6},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,8},{2,4,6},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,8},{1,7,8},{2,3,8},{2,4,6},{2,4,7},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{4,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,7},{4,5,8},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,7},{4,5,8},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,6},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,6},{2,3,7},{2,4,6},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,7},{5,6,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,8},{2,5,6},{3,4,5},{3,4,6},{3,4,7},{3,7,8},{4,5,8},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,8},{2,5,6},{3,4,5},{3,4,6},{3,4,7},{3,7,8},{4,5,8},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,7},{2,3,6},{2,3,8},{2,4,8},{2,5,7},{2,6,7},{3,4,5},{3,4,6},{3,4,7},{3,7,8},{4,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,6},{3,4,7},{4,5,8},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,6}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,7},{2,4,8},{2,5,6},{2,7,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,4,6},{1,4,7},{1,6,8},{1,7,8},{2,3,6},{2,3,8},{2,4,8},{2,5,6},{3,4,5},{3,4,6},{3,4,7},{3,7,8},{4,5,8},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,6},{1,5,7},{2,3,6},{2,4,7},{2,4,8},{2,5,8},{2,6,7},{3,4,5},{3,4,7},{3,4,8},{3,5,8},{4,5,6},{5,6,7}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,6},{1,5,7},{2,3,8},{2,4,6},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,5,6},{4,5,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,6},{2,3,7},{2,4,6},{2,4,8},{2,5,8},{2,6,7},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,7},{5,6,7},{5,6,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,6},{1,5,8},{1,7,8},{2,3,8},{2,4,6},{2,4,7},{2,5,6},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,5,6},{4,5,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,8},{1,5,6},{1,7,8},{2,3,8},{2,4,6},{2,4,7},{2,5,8},{2,6,7},{3,4,6},{3,4,7},{3,4,8},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,6},{1,3,7},{1,4,8},{1,5,6},{1,7,8},{2,3,8},{2,4,6},{2,4,7},{2,5,8},{2,6,7},{3,4,6},{3,4,7},{3,4,8},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,3,7},{1,6,7},{2,3,6},{2,4,5},{2,4,7},{2,4,8},{2,7,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{4,5,6},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,3,7},{1,6,7},{2,3,6},{2,4,5},{2,4,7},{2,4,8},{2,7,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{4,5,6},{5,6,8},{6,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,3,7},{1,6,8},{1,7,8},{2,3,6},{2,4,5},{2,4,7},{2,4,8},{2,7,8},{3,4,6},{3,4,7},{3,4,8},{3,5,8},{4,5,6},{5,6,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,4,6},{1,4,7},{1,4,8},{1,7,8},{2,3,7},{2,3,8},{2,4,5},{2,4,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,6,7},{6,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,4,6},{1,4,7},{1,4,8},{1,7,8},{2,3,7},{2,3,8},{2,5,7},{2,6,8},{3,4,5},{3,4,6},{3,4,8},{3,6,7},{4,5,7},{6,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,4,6},{1,4,7},{1,4,8},{1,7,8},{2,3,7},{2,3,8},{2,5,7},{2,6,8},{3,4,5},{3,4,7},{3,4,8},{4,5,6},{5,6,7},{6,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,4,6},{1,4,7},{1,4,8},{1,7,8},{2,3,7},{2,3,8},{2,5,7},{2,6,8},{3,4,5},{3,4,7},{3,4,8},{4,5,6},{5,6,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,6},{2,3,7},{2,4,6},{2,4,8},{2,5,8},{2,6,7},{3,4,5},{3,4,7},{3,4,8},{3,6,8},{4,5,7},{5,7,8},{6,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,4,6},{1,4,7},{1,4,8},{1,7,8},{2,3,7},{2,3,8},{2,5,7},{2,6,8},{3,4,6},{3,4,7},{3,4,8},{3,5,6},{5,6,7},{6,7,8}},
    {{1,2,3},{1,2,5},{1,2,6},{1,3,5},{1,4,6},{1,4,7},{1,4,8},{1,7,8},{2,3,7},{2,3,8},{2,5,7},{2,6,8},{3,4,6},{3,4,7},{3,4,8},{3,5,6},{5,6,8},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,6},{2,4,6},{2,4,8},{2,5,7},{2,7,8},{3,4,5},{3,4,7},{3,4,8},{3,7,8},{4,5,6},{5,6,7}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,6},{2,4,6},{2,4,8},{2,5,8},{3,4,5},{3,4,7},{3,4,8},{3,7,8},{4,5,6},{5,6,7},{5,7,8}},
    {{1,2,3},{1,2,4},{1,2,5},{1,3,5},{1,3,6},{1,4,7},{1,6,7},{2,3,6},{2,4,6},{2,4,8},{2,5,8},{3,4,5},{3,4,7},{3,4,8},{3,7,8},{4,5,6},{5,6,8},{6,7,8}},
};

const int kComplicatedSphere15Facets[90][4] = {
    {1,2,3,4}, {1,2,3,7}, {1,2,4,6}, {1,2,6,11}, {1,2,7,13}, {1,2,11,13},
    {1,3,4,5}, {1,3,5,7}, {1,4,5,9}, {1,4,6,10}, {1,4,9,15}, {1,4,10,15},
    {1,5,7,8}, {1,5,8,13}, {1,5,9,12}, {1,5,12,13}, {1,6,10,11}, {1,7,8,13},
    {1,9,12,14}, {1,9,14,15}, {1,10,11,14}, {1,10,14,15}, {1,11,12,13}, {1,11,12,14},
    {2,3,4,5}, {2,3,5,8}, {2,3,7,12}, {2,3,8,12}, {2,4,5,6}, {2,5,6,14},
    {2,5,8,14}, {2,6,11,15}, {2,6,14,15}, {2,7,9,12}, {2,7,9,13}, {2,8,9,10},
    {2,8,9,12}, {2,8,10,14}, {2,9,10,13}, {2,10,13,15}, {2,10,14,15}, {2,11,13,15},
    {3,5,7,10}, {3,5,8,15}, {3,5,10,11}, {3,5,11,15}, {3,6,12,13}, {3,6,12,15},
    {3,6,13,14}, {3,6,14,15}, {3,7,10,12}, {3,8,12,15}, {3,9,10,11}, {3,9,10,13},
    {3,9,11,15}, {3,9,13,14}, {3,9,14,15}, {3,10,12,13}, {4,5,6,9}, {4,6,7,8},
    {4,6,7,10}, {4,6,8,9}, {4,7,8,14}, {4,7,10,12}, {4,7,12,14}, {4,8,9,11},
    {4,8,11,14}, {4,9,11,15}, {4,10,12,13}, {4,10,13,15}, {4,11,12,13}, {4,11,12,14},
    {4,11,13,15}, {5,6,9,12}, {5,6,12,13}, {5,6,13,14}, {5,7,8,15}, {5,7,10,11},
    {5,7,11,15}, {5,8,13,14}, {6,7,8,15}, {6,7,10,11}, {6,7,11,15}, {6,8,9,12},
    {6,8,12,15}, {7,8,13,14}, {7,9,12,14}, {7,9,13,14}, {8,9,10,11}, {8,10,11,14},
};

}  // namespace collapsar::detail
