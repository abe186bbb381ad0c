#include "positroid/random.hpp"

namespace positroid {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 1)));
}

long Rng::uniform_int(long lo, long hi) {
    // Rejection sampling keeps this independent of the standard library's
    // distribution implementation.
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Rational Rng::positive_weight() { return Rational(uniform_int(1, 1000)); }

Rational Rng::signed_weight() { return Rational(uniform_int(-1000, 1000)); }

bool Rng::coin() { return (engine_() >> 63) != 0; }

}  // namespace positroid
