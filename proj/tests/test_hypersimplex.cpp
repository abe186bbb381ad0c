#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/fixtures.hpp"
#include "positroid/hypersimplex.hpp"
#include "positroid/plabic.hpp"

#include <set>

using namespace positroid;

namespace {

DecoratedPermutation perm(const char* s) { return DecoratedPermutation::parse(s); }

std::vector<Rational> indicator(Subset s, int n) {
    std::vector<Rational> x(n, Rational(0));
    for (int e : elements(s)) x[e - 1] = 1;
    return x;
}

}  // namespace

TEST_CASE("moment map") {
    PluckerVector p(2, 4, {1, 2, 4, 1, 2, 0});
    auto mu = moment_map(p);
    CHECK(mu == std::vector<Rational>{make_rational(21, 26), make_rational(6, 26), make_rational(5, 26), make_rational(20, 26)});
    PluckerVector e(2, 4, {0, 0, 0, 0, 3, 0});
    CHECK(moment_map(e) == std::vector<Rational>{0, 1, 0, 1});
    CHECK(polytope_vertices(matroid_of(p)).size() == 5);
}

TEST_CASE("cyclic descents and w-simplices") {
    CHECK(cyclic_left_descents({1, 3, 2, 4}) == std::vector<int>{1, 3});
    CHECK(cyclic_left_descents({1, 2, 3, 4}) == std::vector<int>{1});
    CHECK(cyclic_left_descents({3, 2, 4, 1}) == std::vector<int>{2, 3});
    auto s = make_wsimplex({1, 3, 2, 4});
    CHECK(s.vertices == std::vector<Subset>{subset_of({1, 3}), subset_of({2, 3}), subset_of({3, 4}), subset_of({2, 4})});
    std::vector<std::string> names;
    for (const auto& w : enumerate_D(2, 4)) names.push_back(to_string(w));
    CHECK(names == std::vector<std::string>{"1324", "2134", "2314", "3124"});
}

TEST_CASE("Eulerian numbers count D_{k+1,n}") {
    CHECK(eulerian(1, 3) == 4);
    for (int n = 2; n <= 8; ++n)
        for (int k1 = 1; k1 <= n - 1; ++k1) CHECK(Integer(static_cast<long>(enumerate_D(k1, n).size())) == eulerian(k1 - 1, n - 1));
}

TEST_CASE("Stanley triangulation audit") {
    for (int n = 2; n <= 6; ++n)
        for (int k1 = 1; k1 <= n - 1; ++k1) {
            auto a = stanley_audit(k1, n);
            CHECK_MESSAGE(a.ok, n, k1);
        }
}

TEST_CASE("simplex containment") {
    auto w = make_wsimplex({1, 3, 2, 4});
    CHECK(simplex_in_positroid(w, positroid_of_permutation(perm("2,4,1,3"))));
    CHECK_FALSE(simplex_in_positroid(w, positroid_of_permutation(perm("3,1,4,2"))));
    Matroid uniform{2, 4, {}};
    for (auto s : k_subsets(4, 2)) uniform.bases.insert(s);
    for (const auto& x : enumerate_D(2, 4)) CHECK(simplex_in_positroid(x, uniform));
}

TEST_CASE("containment agrees with the LP oracle on barycenters") {
    for (int n = 3; n <= 6; ++n)
        for (int k1 = 1; k1 <= n - 1; ++k1) {
            auto ds = enumerate_D(k1, n);
            for (const auto& t : tile_catalog(k1, n))
                for (const auto& w : ds) CHECK(simplex_in_positroid(w, t.positroid) == point_in_polytope(t.positroid, barycenter(w)));
        }
}

TEST_CASE("tilings of Δ_{2,4}") {
    auto tilings = enumerate_tilings(2, 4);
    REQUIRE(tilings.size() == 2);
    std::set<std::set<std::string>> got;
    for (const auto& t : tilings) {
        std::set<std::string> ps;
        for (const auto& x : t.tiles) ps.insert(x.perm.to_string());
        got.insert(ps);
    }
    CHECK(got == std::set<std::set<std::string>>{{"(3,1,4,2)", "(2,4,1,3)"}, {"(4,3,1,2)", "(3,4,2,1)"}});
    auto ok = verify_tiling({positroid_of_permutation(perm("3,1,4,2")), positroid_of_permutation(perm("2,4,1,3"))}, 2, 4);
    CHECK(ok.valid);
    auto bad = verify_tiling({positroid_of_permutation(perm("3,1,4,2"))}, 2, 4);
    CHECK_FALSE(bad.valid);
    CHECK(bad.violations.front().find("1324") != std::string::npos);
    auto foreign = verify_tiling({positroid_of_permutation(perm("3,4,1,2"))}, 2, 4);
    CHECK_FALSE(foreign.valid);
}

TEST_CASE("tiling cardinality is binomial") {
    for (auto [k1, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}}) {
        auto tilings = enumerate_tilings(k1, n);
        CHECK(!tilings.empty());
        for (const auto& t : tilings) {
            CHECK(Integer(static_cast<long>(t.tiles.size())) == binomial(n - 2, k1 - 1));
            std::vector<Matroid> ms;
            for (const auto& x : t.tiles) ms.push_back(x.positroid);
            auto r = verify_tiling(ms, k1, n);
            CHECK(r.valid);
        }
    }
    auto serial = enumerate_tilings_serial(2, 6), parallel = enumerate_tilings(2, 6);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        for (std::size_t j = 0; j < serial[i].tiles.size(); ++j) CHECK(serial[i].tiles[j].perm == parallel[i].tiles[j].perm);
}

TEST_CASE("triangulation catalog matches the full-dimensional cells") {
    for (int n = 3; n <= 6; ++n)
        for (int k1 = 1; k1 <= n - 1; ++k1) {
            std::set<DecoratedPermutation> a, b;
            for (const auto& t : tile_catalog(k1, n)) a.insert(t.perm);
            for (const auto& p : full_dimensional_cells(k1, n)) b.insert(p);
            CHECK_MESSAGE(a == b, n, k1);
        }
}

TEST_CASE("every triangulation in a class gives the same tile") {
    for (int n = 4; n <= 6; ++n)
        for (int k = 0; k <= n - 2; ++k)
            for (const auto& t : all_bicolored_triangulations(k, n)) {
                auto p = trip_permutation(dual_graph_of_triangulation(t));
                const Tile* tile = find_tile(k + 1, n, p);
                REQUIRE(tile);
                CHECK(tile->subdivision == equivalence_class(t));
            }
}

TEST_CASE("tile inequalities cut out the tile") {
    for (int n = 3; n <= 6; ++n)
        for (int k = 0; k <= n - 2; ++k)
            for (const auto& t : all_bicolored_triangulations(k, n)) {
                auto ineqs = tile_inequalities_hypersimplex(t);
                auto m = positroid_of_graph(dual_graph_of_triangulation(t));
                for (auto s : k_subsets(n, k + 1)) CHECK(satisfies(ineqs, indicator(s, n)) == m.has_basis(s));
            }
    BicoloredTriangulation white(5, {{1, 2, 3, Color::white}, {1, 3, 4, Color::white}, {1, 4, 5, Color::white}});
    for (const auto& q : tile_inequalities_hypersimplex(white)) {
        CHECK(q.lower == 0);
        CHECK(q.upper == 1);
    }
}

TEST_CASE("moment map images of sampled cell points lie in the tile") {
    auto t = fixtures::nine_gon();
    auto g = dual_graph_of_triangulation(t);
    auto ineqs = tile_inequalities_hypersimplex(t);
    for (const auto& p : sample_cell(g, 200, 4)) CHECK(satisfies(ineqs, moment_map(p)));
}

TEST_CASE("counting formulas") {
    CHECK(plane_partitions(1, 2, 1) == 3);
    CHECK(plane_partitions(0, 3, 2) == 1);
    CHECK(plane_partitions(2, 2, 2) == 20);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) CHECK(plane_partitions(a, b, 1) == binomial(a + b, a));
    CHECK(narayana(3, 2) == 3);
    CHECK(narayana(4, 2) == 6);
    CHECK(interior_face_count(2, 5, 1) == 3);
    CHECK(interior_face_count(2, 5, 2) == 2);
}

TEST_CASE("interior walls of tilings of Δ_{2,5}") {
    for (const auto& t : enumerate_tilings(2, 5)) {
        std::vector<std::vector<Subset>> cells;
        for (const auto& x : t.tiles) cells.push_back(x.positroid.sorted_bases());
        CHECK(Integer(static_cast<long>(cells.size())) == interior_face_count(2, 5, 1));
        CHECK(Integer(static_cast<long>(interior_walls(cells, 5).size())) == interior_face_count(2, 5, 2));
    }
}
