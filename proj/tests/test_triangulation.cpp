#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/fixtures.hpp"
#include "positroid/triangulation.hpp"

using namespace positroid;

TEST_CASE("triangulation counts are Catalan numbers") {
    std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132};
    for (int n = 3; n <= 8; ++n) CHECK(all_triangulations(n).size() == catalan[n - 3]);
    CHECK(all_bicolored_triangulations(1, 4).size() == 4);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(BicoloredTriangulation(4, {{1, 2, 3, Color::black}, {2, 3, 4, Color::white}}), std::invalid_argument);
    CHECK_THROWS_AS(BicoloredTriangulation(4, {{1, 2, 3, Color::black}}), std::invalid_argument);
    CHECK(arcs_cross({1, 3}, {2, 4}));
    CHECK_FALSE(arcs_cross({1, 3}, {3, 5}));
}

TEST_CASE("equivalence classes") {
    for (int n = 3; n <= 7; ++n) CHECK(all_bicolored_subdivisions(0, n).size() == 1);
    BicoloredTriangulation a(4, {{1, 2, 3, Color::black}, {1, 3, 4, Color::black}});
    BicoloredTriangulation b(4, {{1, 2, 4, Color::black}, {2, 3, 4, Color::black}});
    CHECK(equivalence_class(a) == equivalence_class(b));
    CHECK(equivalence_class(a).black == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    auto s = equivalence_class(fixtures::nine_gon());
    CHECK(s.k() == 5);
    CHECK(s.black == std::vector<std::vector<int>>{{1, 7, 8, 9}, {2, 3, 4, 5, 7}});
    CHECK(equivalence_class(representative(s)) == s);
    CHECK(subdivision_from_black_polygons(9, {{1, 7, 8, 9}, {2, 3, 4, 5, 7}}) == s);
    CHECK_THROWS_AS(subdivision_from_black_polygons(6, {{1, 3, 5}, {2, 4, 6}}), std::invalid_argument);
}

TEST_CASE("flips") {
    BicoloredTriangulation a(4, {{1, 2, 3, Color::black}, {1, 3, 4, Color::black}});
    auto b = flip(a, {1, 3});
    CHECK(b.diagonals() == std::vector<Arc>{{2, 4}});
    CHECK(flip(b, {2, 4}) == a);
    auto t = fixtures::nine_gon();
    for (Arc d : t.diagonals()) {
        if (!is_mutable_arc(t, d)) {
            CHECK_THROWS_AS(flip(t, d), std::invalid_argument);
            continue;
        }
        CHECK(equivalence_class(flip(t, d)) == equivalence_class(t));
    }
}

TEST_CASE("area") {
    auto t = fixtures::square_123();
    CHECK(area(t, {1, 3}) == 1);
    CHECK(area(t, {1, 4}) == 1);
    CHECK(area(t, {3, 4}) == 0);
    CHECK_THROWS_AS(area(t, {2, 4}), std::invalid_argument);
    auto nine = equivalence_class(fixtures::nine_gon());
    CHECK(area(nine, {2, 7}) == 3);
    CHECK(area(nine, {1, 9}) == 5);
    CHECK(area(nine, {1, 7}) == 3);
}
