#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/amplituhedron.hpp"
#include "positroid/cluster.hpp"
#include "positroid/fixtures.hpp"
#include "positroid/hypersimplex.hpp"

#include <set>

using namespace positroid;

namespace {

std::set<std::string> arrow_labels(const Seed& s) {
    std::set<std::string> out;
    for (auto [i, j] : s.arrows()) out.insert(to_string(s.vertices[i].arc) + ">" + to_string(s.vertices[j].arc));
    return out;
}

RatMatrix z_for(int n, int p) {
    std::vector<Rational> nodes;
    for (int i = 0; i < n; ++i) nodes.emplace_back(i);
    return make_positive_Z(n, p, nodes);
}

std::vector<Arc> distinguished_for(const BicoloredTriangulation& t, const std::vector<std::pair<std::vector<int>, Arc>>& want) {
    std::vector<Arc> out;
    for (const auto& p : equivalence_class(t).black)
        for (const auto& [poly, arc] : want)
            if (poly == p) out.push_back(arc);
    return out;
}

}  // namespace

TEST_CASE("seed of the nine-gon fixture") {
    auto t = fixtures::nine_gon();
    auto d = distinguished_for(t, {{{1, 7, 8, 9}, {1, 7}}, {{2, 3, 4, 5, 7}, {5, 7}}});
    REQUIRE(d.size() == 2);
    auto s = build_seed(t, d);
    CHECK(s.vertices.size() == 10);
    std::set<std::string> frozen, mutable_;
    for (const auto& v : s.vertices) (v.frozen ? frozen : mutable_).insert(to_string(v.arc));
    CHECK(frozen == std::set<std::string>{"1-9", "8-9", "7-8", "2-3", "3-4", "4-5", "2-7"});
    CHECK(mutable_ == std::set<std::string>{"7-9", "3-7", "4-7"});
    CHECK(arrow_labels(s) == std::set<std::string>{"7-9>1-9", "7-9>7-8", "8-9>7-9", "2-3>3-7", "3-7>2-7", "3-7>3-4",
                                                   "3-4>4-7", "4-7>3-7", "4-7>4-5"});
    CHECK_THROWS(build_seed(t, {Arc{1, 8}, Arc{5, 7}}));
    CHECK_THROWS(mutate(s, s.index_of({1, 9})));
}

TEST_CASE("seed sizes") {
    for (int n = 3; n <= 7; ++n)
        for (int k = 0; k <= n - 2; ++k)
            for (const auto& t : all_bicolored_triangulations(k, n)) {
                auto s = build_seed(t);
                REQUIRE(static_cast<int>(s.vertices.size()) == 2 * k);
            }
    BicoloredTriangulation tri(3, {{1, 2, 3, Color::black}});
    CHECK(build_seed(tri).vertices.size() == 2);
    CHECK(build_seed(BicoloredTriangulation(3, {{1, 2, 3, Color::white}})).vertices.empty());
}

TEST_CASE("distinguished variable is 1 and mutation is an involution") {
    auto t = fixtures::nine_gon();
    auto s = build_seed(t);
    auto z = z_for(9, 7);
    auto ys = sample_amplituhedron(top_cell_graph(5, 9), z, 5, 3);
    auto d = default_distinguished(t);
    ClusterVariable self{d.front(), d.front(), 1};
    for (const auto& y : ys) {
        CHECK(*eval_cluster_var(self, y.y, z) == 1);
        for (std::size_t v = 0; v < s.vertices.size(); ++v) {
            if (s.vertices[v].frozen) continue;
            auto twice = mutate(mutate(s, static_cast<int>(v)), static_cast<int>(v));
            CHECK(twice.b == s.b);
            CHECK(*eval_cluster(twice, y.y, z) == *eval_cluster(s, y.y, z));
        }
    }
}

TEST_CASE("exchange relation in a black quadrilateral is the twistor Plücker relation") {
    BicoloredTriangulation t(4, {{1, 2, 3, Color::black}, {1, 3, 4, Color::black}});
    auto s = build_seed(t);
    auto z = z_for(4, 4);
    auto mu = mutate(s, s.index_of({1, 3}));
    for (const auto& y : sample_amplituhedron(top_cell_graph(2, 4), z, 20, 1)) {
        auto tw = [&](int a, int b) { return twistor(y.y, z, {a, b}); };
        CHECK(tw(1, 3) * tw(2, 4) == tw(1, 2) * tw(3, 4) + tw(1, 4) * tw(2, 3));
        auto x = *eval_cluster(mu, y.y, z);
        // new variable on 2-4 relative to the distinguished arc 1-2
        CHECK(x[s.index_of({1, 3})] == (area(flip(t, {1, 3}), {2, 4}) % 2 ? -1 : 1) * tw(2, 4) / tw(1, 2));
    }
}

TEST_CASE("flip equals mutation") {
    int arcs = 0;
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k <= n - 2; ++k)
            for (const auto& t : all_bicolored_triangulations(k, n)) {
                auto rep = flip_mutation_check(t, 20, 7);
                INFO(t.to_string());
                for (const auto& v : rep.violations) INFO(v);
                REQUIRE(rep.ok);
                arcs += rep.arcs_checked;
            }
    CHECK(arcs > 0);
}

TEST_CASE("positivity of cluster variables cuts out the tile") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}, {2, 6}}) {
        auto z = z_for(n, k + 2);
        auto tiling = enumerate_tilings(k + 1, n).front();
        std::vector<BicoloredTriangulation> ts;
        for (const auto& tile : tiling.tiles) ts.push_back(representative(tile.subdivision));
        for (std::size_t i = 0; i < ts.size(); ++i) {
            auto s = build_seed(ts[i]);
            for (std::size_t j = 0; j < ts.size(); ++j)
                for (const auto& y : sample_amplituhedron(hat_graph_of_triangulation(ts[j]), z, i == j ? 100 : 10, 5 + j)) {
                    auto x = eval_cluster(s, y.y, z);
                    if (!x) continue;
                    bool all_positive = std::all_of(x->begin(), x->end(), [](const Rational& v) { return sgn(v) > 0; });
                    CHECK(all_positive == (i == j));
                }
        }
    }
}

TEST_CASE("cluster adjacency") {
    BicoloredTriangulation t(4, {{1, 2, 3, Color::black}, {1, 3, 4, Color::white}});
    auto rep = cluster_adjacency_check(t, 50, 1);
    CHECK(rep.ok);
    CHECK(rep.facets > 0);
    std::set<std::string> facet_arcs;
    for (int n = 4; n <= 6; ++n)
        for (int k = 1; k <= n - 3; ++k)
            for (const auto& sub : all_bicolored_subdivisions(k, n)) {
                auto r = cluster_adjacency_check(representative(sub), 30, 2);
                INFO(sub.to_string());
                for (const auto& v : r.violations) INFO(v);
                CHECK(r.ok);
                if (n == 5 && k == 1)
                    for (Arc a : r.facet_arcs) facet_arcs.insert(to_string(a));
            }
    CHECK(!facet_arcs.empty());
}
