#pragma once

#include "positroid/matroid.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace positroid {

class DecoratedPermutation {
public:
    DecoratedPermutation() = default;
    // images[i-1] = π(i). Fixed points listed in coloops are coloops, all
    // other fixed points are loops.
    explicit DecoratedPermutation(std::vector<int> images, const std::vector<int>& coloops = {});

    // "(3,2_,5,1,6,8,7^,4)" or "3,1,4,2"; an unmarked fixed point is a loop.
    static DecoratedPermutation parse(std::string_view text);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    int inverse(int j) const;
    const std::vector<int>& images() const { return images_; }

    bool is_fixed(int i) const { return images_[i - 1] == i; }
    bool is_loop(int i) const { return is_fixed(i) && !coloop_[i - 1]; }
    bool is_coloop(int i) const { return is_fixed(i) && coloop_[i - 1]; }
    std::vector<int> loops() const;
    std::vector<int> coloops() const;

    std::string to_string() const;

    bool operator==(const DecoratedPermutation&) const = default;
    auto operator<=>(const DecoratedPermutation&) const = default;

private:
    std::vector<int> images_;
    std::vector<bool> coloop_;  // meaningful at fixed points only, false elsewhere
};

// {i : π⁻¹(i) > i} ∪ coloops
std::vector<int> anti_excedances(const DecoratedPermutation& p);
// π(i) = i + k mod n, the permutation of the top cell of Gr_{k,n}^{≥0}.
DecoratedPermutation top_cell_permutation(int k, int n);
std::pair<int, int> type_of(const DecoratedPermutation& p);

// Bounded affine permutation: f(i) in [i, i+n], f(i) = i for loops and
// i+n for coloops.
std::vector<int> bounded_affine(const DecoratedPermutation& p);
DecoratedPermutation from_bounded_affine(const std::vector<int>& f);

// π̂(i) = π(i-1); new fixed points are loops. Rejects π with a loop.
DecoratedPermutation t_dual(const DecoratedPermutation& p);
// Inverse rotation; rejects π̂ with a coloop.
DecoratedPermutation t_dual_inverse(const DecoratedPermutation& p);

std::vector<DecoratedPermutation> all_decorated_permutations(int n);
std::vector<DecoratedPermutation> decorated_permutations_of_type(int k, int n);

// S_μ ⊆ closure(S_π), decided by containment of positroid bases.
bool closure_leq(const Matroid& mu, const Matroid& pi);
bool closure_leq(const DecoratedPermutation& mu, const DecoratedPermutation& pi);

}  // namespace positroid
