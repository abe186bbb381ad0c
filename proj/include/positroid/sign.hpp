#pragma once

#include "positroid/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace positroid {

// Sign changes ignoring zeros.
int var(std::span<const Rational> v);
int var(std::span<const int> signs);

// Maximum of var over all sign completions of the zero entries.
int varbar(std::span<const Rational> v);
int varbar(std::span<const int> signs);

// Exhaustive completion, exponential; kept for tests and small inputs.
int varbar_bruteforce(std::span<const int> signs);

std::vector<int> signs_of(std::span<const Rational> v);

struct SignVector {
    std::vector<int> entries;
    bool projective = false;

    static SignVector affine(std::span<const Rational> v);
    // First nonzero entry made positive.
    static SignVector projective_of(std::span<const Rational> v);

    bool has_zero() const;
    std::string to_string() const;  // "+-0+"
    bool operator==(const SignVector&) const = default;
    auto operator<=>(const SignVector&) const = default;
};

}  // namespace positroid
