#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/grassmann.hpp"
#include "positroid/random.hpp"

using namespace positroid;

namespace {

RatMatrix example_2x4() { return RatMatrix{{1, 0, -1, -2}, {0, 1, 2, 4}}; }

RatMatrix vandermonde(int k, const std::vector<int>& nodes) {
    RatMatrix m(k, nodes.size());
    for (int r = 0; r < k; ++r)
        for (std::size_t c = 0; c < nodes.size(); ++c) {
            Rational x = 1;
            for (int i = 0; i < r; ++i) x *= nodes[c];
            m(r, c) = x;
        }
    return m;
}

RatMatrix random_matrix(Rng& rng, int k, int n, int lo, int hi) {
    RatMatrix m(k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = rng.uniform_int(lo, hi);
    return m;
}

}  // namespace

TEST_CASE("2x4 example: Plücker vector, matroid, positivity, permutation") {
    auto p = plucker_of_matrix(example_2x4());
    std::vector<Rational> expected{1, 2, 4, 1, 2, 0};
    CHECK(p.coords() == expected);
    CHECK(matroid_of(p).to_string() == "{12,13,14,23,24}");
    CHECK(is_tnn(p));
    CHECK_FALSE(is_tp(p));
    CHECK(decorated_permutation_of(example_2x4()) == DecoratedPermutation::parse("3,1,4,2"));
    CHECK(satisfies_plucker_relations(p));
    CHECK(satisfies_three_term_relations(p));
}

TEST_CASE("degenerate inputs") {
    auto p = plucker_of_matrix(RatMatrix{{1, 0, 0}, {0, 1, 0}});
    CHECK(p[subset_of({1, 2})] == 1);
    CHECK(p[subset_of({1, 3})] == 0);
    CHECK(p[subset_of({2, 3})] == 0);
    CHECK(matroid_of(p).bases.size() == 1);
    CHECK(matroid_of(p).satisfies_basis_exchange());
    CHECK_THROWS_AS(plucker_of_matrix(RatMatrix{{1, 2, 3}, {2, 4, 6}}), std::invalid_argument);
    auto pi = decorated_permutation_of(RatMatrix{{1, 0, 0}, {0, 1, 0}});
    CHECK(pi.is_coloop(1));
    CHECK(pi.is_coloop(2));
    CHECK(pi.is_loop(3));
    CHECK_THROWS_AS(decorated_permutation_of(RatMatrix{{1, 0, 1}, {0, 1, -1}}), std::invalid_argument);
}

TEST_CASE("Vandermonde is totally positive; a sign flip breaks nonnegativity") {
    auto p = plucker_of_matrix(vandermonde(2, {1, 2, 3, 4}));
    CHECK(is_tp(p));
    auto q = p;
    q[subset_of({2, 4})] = -q[subset_of({2, 4})];
    CHECK_FALSE(is_tnn(q));
    auto neg = p;
    for (auto s : neg.subsets()) neg[s] = -neg[s];
    CHECK(is_tp(neg));  // projective
}

TEST_CASE("three-term relations and basis exchange on random matrices") {
    Rng rng(5);
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            for (int t = 0; t < 4; ++t) {
                // small entries so that many minors vanish
                auto c = random_matrix(rng, k, n, -1, 1);
                if (rank(c) < static_cast<std::size_t>(k)) continue;
                auto p = plucker_of_matrix(c);
                CHECK(satisfies_three_term_relations(p));
                CHECK(matroid_of(p).satisfies_basis_exchange());
                CHECK(p == plucker_of_matrix_serial(c));
                auto back = plucker_of_matrix(matrix_from_plucker(p));
                CHECK(back.projectively_equal(p));
            }
}

TEST_CASE("left multiplication changes Plücker vectors by the determinant") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        auto c = random_matrix(rng, 3, 6, -5, 5);
        auto g = random_matrix(rng, 3, 3, -3, 3);
        if (rank(c) < 3 || det(g) == 0) continue;
        auto p = plucker_of_matrix(c), q = plucker_of_matrix(g * c);
        CHECK(q.projectively_equal(p));
        for (auto s : p.subsets()) CHECK(q[s] == det(g) * p[s]);
    }
}

TEST_CASE("a non-Plücker vector is rejected") {
    PluckerVector p(2, 4, {1, 1, 1, 1, 1, 1});
    CHECK_FALSE(satisfies_three_term_relations(p));
    CHECK_FALSE(satisfies_plucker_relations(p));
}

TEST_CASE("sampled Gantmakher-Krein checks") {
    auto ex = gk_test(example_2x4(), GkMode::tnn, 200, 1);
    CHECK(ex.exact_verdict);
    CHECK(ex.row_space_ok);
    CHECK(ex.complement_ok);
    CHECK(ex.consistent());
    auto vm = gk_test(vandermonde(2, {1, 2, 3, 4}), GkMode::tp, 200, 2);
    CHECK(vm.exact_verdict);
    CHECK(vm.row_space_ok);
    CHECK(vm.consistent());
    auto bad = gk_test(RatMatrix{{1, 0, 1, 2}, {0, 1, -1, 1}}, GkMode::tnn, 200, 3);
    CHECK_FALSE(bad.exact_verdict);
    REQUIRE_FALSE(bad.row_space_ok);
    REQUIRE(bad.row_witness.has_value());
    CHECK(var(*bad.row_witness) >= 2);
    auto again = gk_test(RatMatrix{{1, 0, 1, 2}, {0, 1, -1, 1}}, GkMode::tnn, 200, 3);
    CHECK(again.row_witness == bad.row_witness);
}
