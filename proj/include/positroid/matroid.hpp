#pragma once

#include "positroid/subsets.hpp"

#include <set>
#include <string>
#include <vector>

namespace positroid {

struct Matroid {
    int k = 0;
    int n = 0;
    std::set<Subset> bases;

    bool has_basis(Subset b) const { return bases.count(b) != 0; }
    bool satisfies_basis_exchange() const;
    // Bases in lexicographic order.
    std::vector<Subset> sorted_bases() const;
    std::string to_string() const;  // "{12,13,14}"

    bool operator==(const Matroid&) const = default;
    auto operator<=>(const Matroid&) const = default;
};

bool is_subset_of(const Matroid& a, const Matroid& b);

}  // namespace positroid
