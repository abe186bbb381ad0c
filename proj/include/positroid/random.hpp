#pragma once

#include "positroid/rational.hpp"

#include <cstdint>
#include <random>

namespace positroid {

// Seeded generator for every randomized operation. Streams for parallel
// work are derived from (seed, index) so results do not depend on the
// thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t seed() const { return seed_; }

    // Uniform integer in [lo, hi].
    long uniform_int(long lo, long hi);
    // Integer numerator uniform in [1, 1000], denominator 1.
    Rational positive_weight();
    // Integer in [-1000, 1000].
    Rational signed_weight();
    bool coin();

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace positroid
