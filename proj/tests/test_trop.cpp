#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/hypersimplex.hpp"
#include "positroid/plabic.hpp"
#include "positroid/trop.hpp"

#include <set>

using namespace positroid;

namespace {

std::set<std::string> cell_words(const SubdivisionCell& c) {
    std::set<std::string> out;
    for (auto s : c.vertices) out.insert(subset_word(s));
    return out;
}

bool same_cells(const Subdivision& a, const Subdivision& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        if (a.cells[i].vertices != b.cells[i].vertices) return false;
    return true;
}

void check_witnesses(const HeightVector& p, const Subdivision& d) {
    for (const auto& c : d.cells)
        for (auto s : k_subsets(p.n, p.k)) {
            Rational v = p[s];
            for (int e : elements(s)) v -= c.witness[e - 1];
            bool on = std::find(c.vertices.begin(), c.vertices.end(), s) != c.vertices.end();
            CHECK(sgn(v) >= 0);
            CHECK((sgn(v) == 0) == on);
        }
}

}  // namespace

TEST_CASE("positivity of tropical Plücker vectors") {
    CHECK(is_positive_tropical(HeightVector(2, 4, {1, 0, 0, 0, 0, 0})));
    CHECK(is_positive_tropical(HeightVector(2, 4)));
    auto bad = HeightVector(2, 4, {0, 1, 0, 0, 1, 0});
    auto v = positivity_violation(bad);
    REQUIRE(v.has_value());
    CHECK(v->to_string() == "(S={};a,b,c,d=1,2,3,4)");
}

TEST_CASE("two square pyramids") {
    HeightVector p(2, 4, {1, 0, 0, 0, 0, 0});
    auto d = regular_subdivision(p, 1);
    REQUIRE(d.cells.size() == 2);
    std::set<std::set<std::string>> got{cell_words(d.cells[0]), cell_words(d.cells[1])};
    CHECK(got == std::set<std::set<std::string>>{{"13", "14", "23", "24", "34"}, {"12", "13", "14", "23", "24"}});
    check_witnesses(p, d);
    CHECK(faces_are_positroids(d));
    CHECK(is_finest(d));
    CHECK(octahedra_subdivided(d));
    std::set<Matroid> cells;
    for (const auto& c : d.cells) cells.insert(Matroid{2, 4, {c.vertices.begin(), c.vertices.end()}});
    CHECK(cells.count(positroid_of_permutation(DecoratedPermutation::parse("2,4,1,3"))));
    CHECK(cells.count(positroid_of_permutation(DecoratedPermutation::parse("3,1,4,2"))));
}

TEST_CASE("trivial subdivisions") {
    auto zero = regular_subdivision(HeightVector(2, 4));
    REQUIRE(zero.cells.size() == 1);
    CHECK(zero.cells[0].vertices.size() == 6);
    CHECK_FALSE(is_finest(zero));
    CHECK_FALSE(octahedra_subdivided(zero));
    CHECK(faces_are_positroids(zero));
    auto simplex = regular_subdivision(HeightVector(1, 4, {3, 1, 4, 1}));
    CHECK(simplex.cells.size() == 1);
    CHECK(is_finest(simplex));
}

TEST_CASE("BFS agrees with the exhaustive oracle") {
    Rng rng(31);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {2, 6}}) {
        for (int t = 0; t < 6; ++t) {
            auto p = random_positive_tropical(k, n, rng);
            auto bfs = regular_subdivision(p, t), oracle = regular_subdivision_oracle(p);
            CHECK(same_cells(bfs, oracle));
            check_witnesses(p, bfs);
        }
        // arbitrary heights, not necessarily positive
        for (int t = 0; t < 4; ++t) {
            HeightVector p(k, n);
            for (auto& h : p.heights) h = rng.uniform_int(0, 6);
            CHECK(same_cells(regular_subdivision(p, t), regular_subdivision_oracle(p)));
        }
    }
}

TEST_CASE("positive tropical vectors induce positroidal subdivisions") {
    Rng rng(7);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}}) {
        for (int t = 0; t < 50; ++t) {
            auto p = random_positive_tropical(k, n, rng);
            REQUIRE(is_positive_tropical(p));
            auto d = regular_subdivision(p, t);
            CHECK(faces_are_positroids(d));
            CHECK(is_finest(d) == octahedra_subdivided(d));
            if (is_finest(d))
                for (const auto& c : d.cells) {
                    Matroid m{k, n, {c.vertices.begin(), c.vertices.end()}};
                    bool in_catalog = false;
                    for (const auto& tile : tile_catalog(k, n)) in_catalog |= tile.positroid == m;
                    CHECK(in_catalog);
                }
        }
    }
}

TEST_CASE("a generic positive tropical vector on Δ_{2,5} gives 3 cells") {
    Rng rng(12);
    int finest = 0;
    for (int t = 0; t < 20; ++t) {
        auto d = regular_subdivision(random_positive_tropical(2, 5, rng), t);
        if (is_finest(d)) {
            ++finest;
            CHECK(d.cells.size() == 3);
            std::vector<std::vector<Subset>> cells;
            for (const auto& c : d.cells) cells.push_back(c.vertices);
            CHECK(interior_walls(cells, 5).size() == 2);
        }
    }
    CHECK(finest > 0);
}
