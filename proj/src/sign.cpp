#include "positroid/sign.hpp"

#include <stdexcept>

namespace positroid {

namespace {

void require_nonzero(std::span<const int> s) {
    for (int x : s)
        if (x != 0) return;
    throw std::invalid_argument("sign variation of the zero vector is undefined");
}

}  // namespace

std::vector<int> signs_of(std::span<const Rational> v) {
    std::vector<int> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = sgn(v[i]);
    return s;
}

int var(std::span<const int> s) {
    require_nonzero(s);
    int changes = 0, last = 0;
    for (int x : s) {
        if (x == 0) continue;
        if (last != 0 && x != last) ++changes;
        last = x;
    }
    return changes;
}

int var(std::span<const Rational> v) {
    auto s = signs_of(v);
    return var(std::span<const int>(s));
}

int varbar(std::span<const int> s) {
    require_nonzero(s);
    const int len = static_cast<int>(s.size());
    int first = 0;
    while (s[first] == 0) ++first;
    int last = len - 1;
    while (s[last] == 0) --last;
    // Leading and trailing zero runs can always alternate fully.
    int total = first + (len - 1 - last);
    int prev = first;
    for (int i = first + 1; i <= last; ++i) {
        if (s[i] == 0) continue;
        int run = i - prev - 1;
        // run zeros between s[prev] and s[i]: run+1 gaps; all of them can
        // change sign iff the parities line up.
        bool aligned = (s[i] == s[prev]) == (run % 2 == 1);
        total += run + (aligned ? 1 : 0);
        prev = i;
    }
    return total;
}

int varbar(std::span<const Rational> v) {
    auto s = signs_of(v);
    return varbar(std::span<const int>(s));
}

int varbar_bruteforce(std::span<const int> s) {
    require_nonzero(s);
    std::vector<int> zeros;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 0) zeros.push_back(static_cast<int>(i));
    if (zeros.size() > 24) throw std::invalid_argument("too many zeros for exhaustive completion");
    std::vector<int> w(s.begin(), s.end());
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << zeros.size()); ++mask) {
        for (std::size_t j = 0; j < zeros.size(); ++j) w[zeros[j]] = ((mask >> j) & 1) ? 1 : -1;
        best = std::max(best, var(std::span<const int>(w)));
    }
    return best;
}

SignVector SignVector::affine(std::span<const Rational> v) { return {signs_of(v), false}; }

SignVector SignVector::projective_of(std::span<const Rational> v) {
    SignVector out{signs_of(v), true};
    for (int x : out.entries) {
        if (x == 0) continue;
        if (x < 0)
            for (int& y : out.entries) y = -y;
        break;
    }
    return out;
}

bool SignVector::has_zero() const {
    for (int x : entries)
        if (x == 0) return true;
    return false;
}

std::string SignVector::to_string() const {
    std::string out;
    for (int x : entries) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
    return out;
}

}  // namespace positroid
