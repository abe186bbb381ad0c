#pragma once

#include "positroid/matroid.hpp"
#include "positroid/random.hpp"
#include "positroid/rational.hpp"
#include "positroid/subsets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace positroid {

// Heights on the vertices e_I of Δ_{k,n}, I in lexicographic order.
struct HeightVector {
    int k = 0;
    int n = 0;
    std::vector<Rational> heights;

    HeightVector() = default;
    HeightVector(int k, int n);
    HeightVector(int k, int n, std::vector<Rational> heights);
    const Rational& operator[](Subset s) const;
    Rational& operator[](Subset s);
};

// A three-term relation that fails: P_{Sac} + P_{Sbd} is not the minimum
// of P_{Sab} + P_{Scd} and P_{Sad} + P_{Sbc}.
struct TropicalViolation {
    Subset s = 0;
    int a = 0, b = 0, c = 0, d = 0;
    std::string to_string() const;  // "(S={1};a,b,c,d=2,3,4,5)"
};
std::optional<TropicalViolation> positivity_violation(const HeightVector& p);
bool is_positive_tropical(const HeightVector& p);

struct SubdivisionCell {
    std::vector<Subset> vertices;  // lexicographic
    // P_I - y·e_I >= 0 with equality exactly on the vertices.
    std::vector<Rational> witness;
};

struct Subdivision {
    int k = 0;
    int n = 0;
    std::vector<SubdivisionCell> cells;  // full-dimensional, sorted by vertex list
};

// Lower-hull cells of the lifted hypersimplex. Cells are located by an
// exact LP at points x of Δ; neighbours are reached across interior
// facets. The start point is a seeded perturbation of the barycenter.
Subdivision regular_subdivision(const HeightVector& p, std::uint64_t seed = 0);
// Exhaustive oracle over affinely spanning n-subsets of lifted vertices.
Subdivision regular_subdivision_oracle(const HeightVector& p);

// Cells and interior walls all carry positroid basis sets.
bool faces_are_positroids(const Subdivision& d);
// Count criterion: C(n-2, k-1) full-dimensional cells.
bool is_finest(const Subdivision& d);
// No cell contains a whole octahedron {Sab, Sac, Sad, Sbc, Sbd, Scd}.
bool octahedra_subdivided(const Subdivision& d);

// P_I = min over matchings M of the top-cell graph with ∂M = I of the sum
// of random edge heights in [0, 20].
HeightVector random_positive_tropical(int k, int n, Rng& rng);

}  // namespace positroid
