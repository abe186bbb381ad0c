#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "positroid/decorated_perm.hpp"
#include "positroid/plabic.hpp"

#include <set>

using namespace positroid;

namespace {
DecoratedPermutation perm(const char* s) { return DecoratedPermutation::parse(s); }
}  // namespace

TEST_CASE("parsing and printing") {
    auto p = perm("(3,2_,5,1,6,8,7^,4)");
    CHECK(p.is_loop(2));
    CHECK(p.is_coloop(7));
    CHECK(p.to_string() == "(3,2_,5,1,6,8,7^,4)");
    CHECK(perm("3,1,4,2").to_string() == "(3,1,4,2)");
    CHECK_THROWS_AS(perm("3,1,3,2"), std::invalid_argument);
    CHECK_THROWS_AS(perm("2_,1"), std::invalid_argument);
    CHECK_THROWS_AS(perm("1,x"), std::invalid_argument);
}

TEST_CASE("anti-excedances and type") {
    CHECK(anti_excedances(perm("(3,2_,5,1,6,8,7^,4)")) == std::vector<int>{1, 4, 7});
    CHECK(anti_excedances(perm("1,2,3")).empty());
    CHECK(type_of(perm("3,1,4,2")) == std::pair{2, 4});
    CHECK(type_of(perm("(8,5,9,2,3,6_,4,1,7)")).first == 5);
    CHECK(type_of(perm("(1^,2^,3^)")).first == 3);
    CHECK(type_of(perm("(2,3,1,4_)")).first == 1);
}

TEST_CASE("bounded affine permutations round trip") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : all_decorated_permutations(n)) CHECK(from_bounded_affine(bounded_affine(p)) == p);
}

TEST_CASE("T-duality on the square") {
    CHECK(t_dual(perm("3,1,4,2")) == perm("(2,3,1,4_)"));
    CHECK(t_dual(perm("2,4,1,3")) == perm("(3,2_,4,1)"));
    CHECK(t_dual(perm("4,3,1,2")) == perm("(2,4,3_,1)"));
    CHECK(t_dual(perm("3,4,2,1")) == perm("(1_,3,4,2)"));
    auto id = t_dual(perm("2,3,4,5,1"));
    for (int i = 1; i <= 5; ++i) CHECK(id.is_loop(i));
    CHECK_THROWS_AS(t_dual(perm("(1_,3,2)")), std::invalid_argument);
}

TEST_CASE("T-duality is a bijection from loopless (k+1,n) to coloopless (k,n)") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            std::set<DecoratedPermutation> image, target;
            for (const auto& p : decorated_permutations_of_type(k + 1, n)) {
                if (!p.loops().empty()) continue;
                auto q = t_dual(p);
                CHECK(type_of(q).first == k);
                CHECK(q.coloops().empty());
                CHECK(t_dual_inverse(q) == p);
                image.insert(q);
            }
            for (const auto& q : decorated_permutations_of_type(k, n))
                if (q.coloops().empty()) target.insert(q);
            CHECK(image == target);
        }
}

TEST_CASE("closure order") {
    auto top = perm("3,4,1,2");
    CHECK(closure_leq(top, top));
    Matroid single{2, 4, {subset_of({1, 2})}};
    Matroid uniform{2, 4, {}};
    for (auto s : k_subsets(4, 2)) uniform.bases.insert(s);
    CHECK(closure_leq(single, uniform));
    CHECK_FALSE(closure_leq(uniform, single));
    // the hat map preserves the order on loopless type (2,4)
    std::vector<DecoratedPermutation> loopless;
    for (const auto& p : decorated_permutations_of_type(2, 4))
        if (p.loops().empty()) loopless.push_back(p);
    int comparable = 0;
    for (const auto& mu : loopless)
        for (const auto& pi : loopless)
            if (closure_leq(mu, pi)) {
                ++comparable;
                CHECK(closure_leq(t_dual(mu), t_dual(pi)));
            }
    CHECK(comparable > static_cast<int>(loopless.size()));
}

TEST_CASE("enumeration counts") {
    // decorated permutations of [n]: sum over j of n!/j! * 2^j-style count
    CHECK(all_decorated_permutations(1).size() == 2);
    CHECK(all_decorated_permutations(2).size() == 5);
    CHECK(all_decorated_permutations(3).size() == 16);
    CHECK(decorated_permutations_of_type(2, 4).size() == 33);
}
