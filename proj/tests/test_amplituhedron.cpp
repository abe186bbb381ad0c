#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/amplituhedron.hpp"

#include <array>
#include <set>

using namespace positroid;

namespace {

RatMatrix vandermonde(int n, int p, std::vector<int> nodes) {
    std::vector<Rational> t(nodes.begin(), nodes.begin() + n);
    return make_positive_Z(n, p, t);
}

RatMatrix random_z(int n, int p, Rng& rng) {
    std::vector<Rational> t;
    Rational x = rng.uniform_int(0, 5);
    for (int i = 0; i < n; ++i) {
        t.push_back(x);
        x += make_rational(rng.uniform_int(1, 9), rng.uniform_int(1, 4));
    }
    return make_positive_Z(n, p, t);
}

BicoloredTriangulation square(std::initializer_list<int> black) {
    std::vector<int> b(black);
    std::vector<int> w;
    if (b == std::vector<int>{1, 2, 3}) w = {1, 3, 4};
    if (b == std::vector<int>{1, 3, 4}) w = {1, 2, 3};
    if (b == std::vector<int>{1, 2, 4}) w = {2, 3, 4};
    if (b == std::vector<int>{2, 3, 4}) w = {1, 2, 4};
    return BicoloredTriangulation(4, {{b[0], b[1], b[2], Color::black}, {w[0], w[1], w[2], Color::white}});
}

std::vector<Rational> cyclic_twistors(const RatMatrix& y, const RatMatrix& z) {
    std::vector<Rational> out;
    for (Subset s : k_subsets(static_cast<int>(z.rows()), static_cast<int>(z.cols() - y.rows())))
        out.push_back(twistor(y, z, elements(s)));
    return out;
}

}  // namespace

TEST_CASE("positive Z and twisted shift") {
    auto z = vandermonde(4, 3, {0, 1, 2, 3});
    CHECK(all_maximal_minors_positive(z));
    CHECK(all_maximal_minors_positive(twisted_shift(z)));
    CHECK(all_maximal_minors_positive(twisted_shift(vandermonde(6, 4, {1, 2, 3, 5, 8, 13}))));
    CHECK_THROWS(make_positive_Z(3, 2, {Rational(1), Rational(1), Rational(2)}));
    CHECK_THROWS(make_positive_Z(3, 2, {Rational(2), Rational(1), Rational(3)}));
    CHECK(det(vandermonde(3, 3, {1, 2, 4})) == 6);
}

TEST_CASE("amp map and twistors") {
    auto z = vandermonde(4, 3, {0, 1, 2, 3});
    PluckerVector e1(1, 4, {1, 0, 0, 0});
    CHECK(amp_map(e1, z).row(0) == z.row(0));
    auto y = amp_map(e1, z);
    CHECK(twistor(y, z, {1, 3}) == 0);
    CHECK(twistor(y, z, {2, 2}) == 0);
    auto sv = sign_stratum(y, z);
    CHECK(sv.to_string() == "000+++");
    CHECK_FALSE(m2_interior_test(y, z));
    RatMatrix neg = y;
    for (std::size_t c = 0; c < neg.cols(); ++c) neg(0, c) = -neg(0, c);
    CHECK(sign_stratum(neg, z) == sv);
    RatMatrix none(0, 3);
    CHECK(twistor(none, z, {1, 2, 4}) == det(z.select_rows(std::vector<int>{0, 1, 3})));
}

TEST_CASE("expand path agrees with the determinant path") {
    const std::vector<std::array<int, 3>> shapes{{1, 2, 4}, {2, 2, 5}, {2, 1, 5}, {1, 3, 5}};
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::stream(11, i);
        auto [k, m, n] = shapes[i % shapes.size()];
        auto z = random_z(n, k + m, rng);
        auto c = sample_cell(top_cell_graph(k, n), 1, 100 + i).front();
        auto y = amp_map(c, z);
        for (Subset s : k_subsets(n, m)) {
            CHECK(twistor(y, z, elements(s)) == twistor_expand(c, z, elements(s)) / c.coords().front());
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("twistor Plücker relations at m = 2") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 5}}) {
        auto g = top_cell_graph(k, n);
        for (int i = 0; i < 100; ++i) {
            Rng rng = Rng::stream(21, i);
            auto z = random_z(n, k + 2, rng);
            auto y = amp_map(sample_cell(g, 1, 300 + i).front(), z);
            auto t = [&](int a, int b) { return twistor(y, z, {a, b}); };
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c)
                        for (int d = c + 1; d <= n; ++d) REQUIRE(t(a, c) * t(b, d) == t(a, b) * t(c, d) + t(a, d) * t(b, c));
        }
    }
}

TEST_CASE("m = 1 sign flips") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {2, 6}, {3, 6}}) {
        auto z = vandermonde(n, k + 1, {0, 1, 2, 3, 4, 5});
        for (const auto& s : sample_amplituhedron(top_cell_graph(k, n), z, 30, 5)) {
            CHECK(m1_membership(s.y, z));
            CHECK(varbar(cyclic_twistors(s.y, z)) == k);
            // odd m with r = 0
            CHECK(sgn(twistor(s.y, z, {1})) * (k % 2 ? -1 : 1) > 0);
            CHECK(sgn(twistor(s.y, z, {n})) > 0);
            CHECK(general_m_boundary_signs(s.y, z));
        }
    }
    auto z = vandermonde(4, 2, {0, 1, 2, 3});
    CHECK_FALSE(m1_membership(RatMatrix::from_rows({{Rational(0), Rational(1)}}), z));
}

TEST_CASE("m = 2 interior test and the general-m conditions") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}, {2, 6}}) {
        auto z = vandermonde(n, k + 2, {0, 1, 2, 3, 4, 5});
        for (const auto& s : sample_amplituhedron(top_cell_graph(k, n), z, 25, 9)) {
            CHECK(m2_interior_test(s.y, z));
            CHECK(general_m_boundary_signs(s.y, z) == m2_interior_test(s.y, z));
        }
    }
    auto z = vandermonde(6, 5, {0, 1, 2, 3, 4, 5});
    for (const auto& s : sample_amplituhedron(top_cell_graph(1, 6), z, 20, 3)) CHECK(general_m_boundary_signs(s.y, z));
    auto z3 = vandermonde(6, 4, {0, 1, 2, 3, 4, 5});
    for (const auto& s : sample_amplituhedron(top_cell_graph(1, 6), z3, 20, 3)) CHECK(general_m_boundary_signs(s.y, z3));
}

TEST_CASE("tile membership from the hat graph") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}}) {
        auto z = vandermonde(n, k + 2, {0, 1, 2, 3, 4});
        auto ts = all_bicolored_triangulations(k, n);
        for (std::size_t i = 0; i < ts.size(); i += 3) {
            auto hat = hat_graph_of_triangulation(ts[i]);
            for (const auto& s : sample_amplituhedron(hat, z, 100, i)) {
                REQUIRE(tile_membership_m2(s.y, z, ts[i]));
                CHECK(m2_interior_test(s.y, z));
            }
        }
    }
}

TEST_CASE("the two tilings of A_{4,1,2}") {
    auto z = vandermonde(4, 3, {0, 1, 2, 3});
    auto left = verify_amp_tiling_m2({square({1, 2, 3}), square({1, 3, 4})}, z, 300, 1);
    CHECK(left.valid);
    CHECK(left.overlapping == 0);
    CHECK(left.uncovered == 0);
    std::set<std::string> dual;
    for (const auto& p : left.dual_perms) dual.insert(p.to_string());
    CHECK(dual == std::set<std::string>{"(3,1,4,2)", "(2,4,1,3)"});
    auto right = verify_amp_tiling_m2({square({1, 2, 4}), square({2, 3, 4})}, z, 300, 1);
    CHECK(right.valid);
    for (auto t : {square({1, 2, 3}), square({1, 2, 4})}) {
        auto single = verify_amp_tiling_m2({t}, z, 100, 2);
        CHECK_FALSE(single.valid);
        CHECK(single.uncovered > 0);
    }
    CHECK_FALSE(verify_amp_tiling_m2({square({1, 2, 3}), square({1, 2, 4})}, z, 300, 1).valid);
}

TEST_CASE("w-chambers of A_{4,1,2}") {
    auto z = vandermonde(4, 3, {0, 1, 2, 3});
    auto ds = enumerate_D(2, 4);
    REQUIRE(ds.size() == 4);
    std::set<std::string> strata;
    int inside_1324 = 0;
    for (const auto& s : sample_amplituhedron(top_cell_graph(1, 4), z, 1000, 42)) {
        auto tw = cyclic_twistors(s.y, z);
        auto sv = SignVector::affine(tw);
        if (sv.has_zero()) continue;
        strata.insert(sv.to_string());
        int inside = 0;
        for (const auto& ws : ds) {
            auto v = w_chamber_membership(s.y, z, ws);
            inside += v == ChamberVerdict::inside;
            if (to_string(ws) == "1324") {
                bool want = sv.to_string() == "++-+-+";
                CHECK((v == ChamberVerdict::inside) == want);
                inside_1324 += want;
            }
        }
        CHECK(inside == 1);
    }
    CHECK(strata.size() == 4);
    CHECK(inside_1324 > 0);
    CHECK(w_chamber_membership(amp_map(PluckerVector(1, 4, {1, 0, 0, 0}), z), z, ds.front()) == ChamberVerdict::boundary);
}

TEST_CASE("B-amplituhedron identity") {
    const std::vector<std::pair<int, int>> km{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    for (int i = 0; i < 50; ++i) {
        Rng rng = Rng::stream(31, i);
        auto [k, m] = km[i % km.size()];
        int n = k + m + 1 + static_cast<int>(rng.uniform_int(1, 2));
        auto z = random_z(n, k + m, rng);
        auto c = matrix_from_plucker(sample_cell(top_cell_graph(k, n), 1, 500 + i).front());
        auto rep = b_point(c, z);
        CHECK(rep.dim_x == m);
        CHECK(rep.ok);
    }
    auto z = vandermonde(4, 2, {0, 1, 2, 3});
    CHECK(b_point(RatMatrix(0, 4), z).ok);
}

TEST_CASE("image dimension is km") {
    for (auto [k, m, n] : std::vector<std::array<int, 3>>{{1, 2, 4}, {1, 2, 5}, {2, 2, 5}}) {
        std::vector<int> nodes{0, 1, 2, 3, 4};
        auto z = vandermonde(n, k + m, nodes);
        CHECK(image_dimension(top_cell_graph(k, n), z, 2, 7) == k * m);
    }
    auto z = vandermonde(5, 4, {0, 1, 2, 3, 4});
    auto t = all_bicolored_triangulations(2, 5).front();
    CHECK(image_dimension(hat_graph_of_triangulation(t), z, 2, 7) == 4);
}

TEST_CASE("tile counts") {
    // m = 1, k = 1: segments [Z_i, Z_{i+1}]
    auto z = vandermonde(4, 2, {0, 1, 2, 3});
    auto segs = m1_segment_tiling(4);
    CHECK(segs.size() == binomial(3, 1));
    for (const auto& p : segs) CHECK(image_dimension(graph_of_decorated_permutation(p).graph, z, 2, 1) == 1);
    for (const auto& s : sample_amplituhedron(top_cell_graph(1, 4), z, 200, 8)) {
        int hits = 0;
        for (int i = 1; i < 4; ++i) hits += k1_open_cone_membership(s.y, z, subset_of({i, i + 1}));
        CHECK(hits == 1);
    }
    // m = 2
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}}) {
        std::vector<int> nodes{0, 1, 2, 3, 4};
        auto zz = vandermonde(n, k + 2, nodes);
        auto tilings = enumerate_tilings(k + 1, n);
        REQUIRE(!tilings.empty());
        for (std::size_t i = 0; i < std::min<std::size_t>(tilings.size(), 3); ++i) {
            std::vector<BicoloredTriangulation> ts;
            for (const auto& tile : tilings[i].tiles) ts.push_back(representative(tile.subdivision));
            CHECK(ts.size() == binomial(n - 2, k));
            CHECK(verify_amp_tiling_m2(ts, zz, 100, i).valid);
        }
    }
    for (int k = 0; k <= 5; ++k)
        for (int n = k + 2; n <= 10; ++n) CHECK(plane_partitions(k, n - k - 2, 1) == binomial(n - 2, k));
}
