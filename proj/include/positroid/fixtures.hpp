#pragma once

#include "positroid/plabic.hpp"
#include "positroid/triangulation.hpp"

namespace positroid::fixtures {

// Bipartite graph on 4 boundary vertices with trip permutation (3,1,4,2)
// and positroid {12,13,14,23,24}.
PlabicGraph g1();

// 9-gon, fan at 7; black triangles 789, 179, 237, 347, 457. Type (5,9).
BicoloredTriangulation nine_gon();

// Square with black triangle 123 (diagonal 1-3).
BicoloredTriangulation square_123();

}  // namespace positroid::fixtures
