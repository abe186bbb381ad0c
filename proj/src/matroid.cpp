#include "positroid/matroid.hpp"

#include <algorithm>

namespace positroid {

bool Matroid::satisfies_basis_exchange() const {
    if (bases.empty()) return false;
    for (Subset b1 : bases)
        for (Subset b2 : bases) {
            for (int x : elements(b1 & ~b2)) {
                bool found = false;
                for (int y : elements(b2 & ~b1))
                    if (has_basis(with(without(b1, x), y))) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
        }
    return true;
}

std::vector<Subset> Matroid::sorted_bases() const {
    std::vector<Subset> out(bases.begin(), bases.end());
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::string Matroid::to_string() const {
    std::string out = "{";
    bool first = true;
    for (Subset b : sorted_bases()) {
        if (!first) out += ',';
        first = false;
        out += n <= 9 ? subset_word(b) : "[" + subset_label(b) + "]";
    }
    return out + "}";
}

bool is_subset_of(const Matroid& a, const Matroid& b) {
    if (a.n != b.n || a.k != b.k) return false;
    return std::includes(b.bases.begin(), b.bases.end(), a.bases.begin(), a.bases.end());
}

}  // namespace positroid
