#include "positroid/fixtures.hpp"

namespace positroid::fixtures {

PlabicGraph g1() {
    using C = Color;
    // 0..3 boundary, 4,5 white on legs 1,2; 6 black hub; 7 white toward 3,4
    return PlabicGraph::from_neighbor_lists(
        4, {C::white, C::white, C::white, C::white, C::white, C::white, C::black, C::white},
        {{4}, {5}, {7}, {7}, {0, 6}, {1, 6}, {4, 5, 7}, {6, 2, 3}});
}

BicoloredTriangulation nine_gon() {
    using C = Color;
    return BicoloredTriangulation(9, {{7, 8, 9, C::black}, {1, 7, 9, C::black}, {2, 3, 7, C::black},
                                      {3, 4, 7, C::black}, {4, 5, 7, C::black}, {1, 2, 7, C::white},
                                      {5, 6, 7, C::white}});
}

BicoloredTriangulation square_123() {
    return BicoloredTriangulation(4, {{1, 2, 3, Color::black}, {1, 3, 4, Color::white}});
}

}  // namespace positroid::fixtures
