#include "positroid/subsets.hpp"

#include "positroid/rational.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace positroid {

Subset subset_of(std::initializer_list<int> elements) {
    return subset_of(std::vector<int>(elements));
}

Subset subset_of(const std::vector<int>& elems) {
    Subset s = 0;
    for (int i : elems) {
        if (i < 1 || i > kMaxN) throw std::invalid_argument("subset element out of range: " + std::to_string(i));
        if (contains(s, i)) throw std::invalid_argument("repeated subset element " + std::to_string(i));
        s = with(s, i);
    }
    return s;
}

std::vector<int> elements(Subset s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

int size_of(Subset s) { return std::popcount(s); }

Subset full_set(int n) { return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1); }

std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back(subset_of(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::size_t lex_rank(Subset s, int n) {
    // Count subsets lexicographically before s: at each chosen element,
    // add all subsets that pick a smaller element at that position.
    auto e = elements(s);
    int k = static_cast<int>(e.size());
    std::size_t rank = 0;
    int prev = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (int x = prev + 1; x < e[pos]; ++x)
            rank += binomial(n - x, k - pos - 1).get_ui();
        prev = e[pos];
    }
    return rank;
}

std::string subset_label(Subset s) {
    std::string out;
    for (int i : elements(s)) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

std::string subset_word(Subset s) {
    std::string out;
    for (int i : elements(s)) out += std::to_string(i);
    return out;
}

Subset parse_subset_label(std::string_view text) {
    std::vector<int> elems;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("malformed subset label '" + std::string(text) + "'");
        for (char c : cur)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed subset label '" + std::string(text) + "'");
        elems.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') flush();
        else if (c != ' ') cur += c;
    }
    if (!text.empty()) flush();
    return subset_of(elems);
}

bool lex_less(Subset a, Subset b) {
    auto ea = elements(a), eb = elements(b);
    return ea < eb;
}

}  // namespace positroid
