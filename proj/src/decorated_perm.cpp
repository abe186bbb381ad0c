#include "positroid/decorated_perm.hpp"

#include "positroid/plabic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace positroid {

DecoratedPermutation::DecoratedPermutation(std::vector<int> images, const std::vector<int>& coloops)
    : images_(std::move(images)), coloop_(images_.size(), false) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("decorated permutation: images are not a permutation of [n]");
        seen[v] = true;
    }
    for (int c : coloops) {
        if (c < 1 || c > n || images_[c - 1] != c)
            throw std::invalid_argument("decorated permutation: coloop " + std::to_string(c) + " is not a fixed point");
        coloop_[c - 1] = true;
    }
}

DecoratedPermutation DecoratedPermutation::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') s += c;
    if (s.empty()) throw std::invalid_argument("empty decorated permutation");
    std::vector<int> images, coloops, loops;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        char mark = 0;
        if (!tok.empty() && (tok.back() == '_' || tok.back() == '^')) {
            mark = tok.back();
            tok.pop_back();
        }
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed decorated permutation '" + std::string(text) + "'");
        int v = std::stoi(tok);
        images.push_back(v);
        int i = static_cast<int>(images.size());
        if (mark && v != i)
            throw std::invalid_argument("decoration on non-fixed point " + std::to_string(i));
        if (mark == '^') coloops.push_back(i);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return DecoratedPermutation(std::move(images), coloops);
}

int DecoratedPermutation::inverse(int j) const {
    for (int i = 1; i <= n(); ++i)
        if (images_[i - 1] == j) return i;
    throw std::out_of_range("value outside permutation");
}

std::vector<int> DecoratedPermutation::loops() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i)
        if (is_loop(i)) out.push_back(i);
    return out;
}

std::vector<int> DecoratedPermutation::coloops() const {
    std::vector<int> out;
    for (int i = 1; i <= n(); ++i)
        if (is_coloop(i)) out.push_back(i);
    return out;
}

std::string DecoratedPermutation::to_string() const {
    std::string out = "(";
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(images_[i - 1]);
        if (is_loop(i)) out += '_';
        if (is_coloop(i)) out += '^';
    }
    return out + ")";
}

DecoratedPermutation top_cell_permutation(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    std::vector<int> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = (i - 1 + k) % n + 1;
    std::vector<int> coloops;
    if (k == n)
        for (int i = 1; i <= n; ++i) coloops.push_back(i);
    return DecoratedPermutation(images, coloops);
}

std::vector<int> anti_excedances(const DecoratedPermutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.n(); ++i)
        if (p.is_coloop(i) || p.inverse(i) > i) out.push_back(i);
    return out;
}

std::pair<int, int> type_of(const DecoratedPermutation& p) {
    return {static_cast<int>(anti_excedances(p).size()), p.n()};
}

std::vector<int> bounded_affine(const DecoratedPermutation& p) {
    const int n = p.n();
    std::vector<int> f(n);
    for (int i = 1; i <= n; ++i) {
        int j = p(i);
        if (p.is_loop(i)) f[i - 1] = i;
        else if (p.is_coloop(i)) f[i - 1] = i + n;
        else f[i - 1] = j > i ? j : j + n;
    }
    return f;
}

DecoratedPermutation from_bounded_affine(const std::vector<int>& f) {
    const int n = static_cast<int>(f.size());
    std::vector<int> images(n);
    std::vector<int> coloops;
    for (int i = 1; i <= n; ++i) {
        int v = f[i - 1];
        if (v < i || v > i + n) throw std::invalid_argument("affine permutation out of bounds");
        images[i - 1] = (v - 1) % n + 1;
        if (v == i + n) coloops.push_back(i);
    }
    return DecoratedPermutation(std::move(images), coloops);
}

DecoratedPermutation t_dual(const DecoratedPermutation& p) {
    if (!p.loops().empty()) throw std::invalid_argument("t_dual requires a loopless decorated permutation");
    const int n = p.n();
    std::vector<int> images(n);
    for (int i = 1; i <= n; ++i) images[i - 1] = p(i == 1 ? n : i - 1);
    return DecoratedPermutation(std::move(images));
}

DecoratedPermutation t_dual_inverse(const DecoratedPermutation& p) {
    if (!p.coloops().empty()) throw std::invalid_argument("t_dual_inverse requires a coloopless decorated permutation");
    const int n = p.n();
    std::vector<int> images(n);
    std::vector<int> coloops;
    for (int i = 1; i <= n; ++i) {
        images[i - 1] = p(i == n ? 1 : i + 1);
        if (images[i - 1] == i) coloops.push_back(i);
    }
    return DecoratedPermutation(std::move(images), coloops);
}

std::vector<DecoratedPermutation> all_decorated_permutations(int n) {
    std::vector<DecoratedPermutation> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> fixed;
        for (int i = 1; i <= n; ++i)
            if (perm[i - 1] == i) fixed.push_back(i);
        for (unsigned mask = 0; mask < (1u << fixed.size()); ++mask) {
            std::vector<int> coloops;
            for (std::size_t j = 0; j < fixed.size(); ++j)
                if ((mask >> j) & 1u) coloops.push_back(fixed[j]);
            out.emplace_back(perm, coloops);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<DecoratedPermutation> decorated_permutations_of_type(int k, int n) {
    std::vector<DecoratedPermutation> out;
    for (auto& p : all_decorated_permutations(n))
        if (type_of(p).first == k) out.push_back(std::move(p));
    return out;
}

bool closure_leq(const Matroid& mu, const Matroid& pi) { return is_subset_of(mu, pi); }

bool closure_leq(const DecoratedPermutation& mu, const DecoratedPermutation& pi) {
    if (mu.n() != pi.n()) throw std::invalid_argument("closure_leq: different n");
    return closure_leq(positroid_of_permutation(mu), positroid_of_permutation(pi));
}

}  // namespace positroid
