#pragma once

#include "positroid/decorated_perm.hpp"
#include "positroid/matrix.hpp"
#include "positroid/matroid.hpp"
#include "positroid/sign.hpp"
#include "positroid/subsets.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace positroid {

struct SubsetIndex;

// Projective point of Gr_{k,n}: coordinates indexed by the k-subsets of [n]
// in lexicographic order.
class PluckerVector {
public:
    PluckerVector() = default;
    PluckerVector(int k, int n);
    PluckerVector(int k, int n, std::vector<Rational> coords);

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<Subset>& subsets() const;
    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t index_of(Subset s) const;
    const Rational& operator[](Subset s) const { return coords_[index_of(s)]; }
    Rational& operator[](Subset s) { return coords_[index_of(s)]; }

    bool is_zero() const;
    // Scaled so that the first nonzero coordinate is 1.
    PluckerVector normalized() const;
    bool projectively_equal(const PluckerVector& other) const;

    bool operator==(const PluckerVector& other) const { return k_ == other.k_ && n_ == other.n_ && coords_ == other.coords_; }

private:
    int k_ = 0;
    int n_ = 0;
    std::shared_ptr<const SubsetIndex> index_;
    std::vector<Rational> coords_;
};

// Minors over all k-subsets; parallel over subsets.
PluckerVector plucker_of_matrix(const RatMatrix& c);
PluckerVector plucker_of_matrix_serial(const RatMatrix& c);

Matroid matroid_of(const PluckerVector& p);
bool is_tnn(const PluckerVector& p);
bool is_tp(const PluckerVector& p);

// k×n representative whose columns at the lex-first basis I0 form the
// identity; its Plücker vector equals p / p_{I0} iff p satisfies all
// Plücker relations.
RatMatrix matrix_from_plucker(const PluckerVector& p);
bool satisfies_plucker_relations(const PluckerVector& p);
// p_{Sac} p_{Sbd} = p_{Sab} p_{Scd} + p_{Sad} p_{Sbc} for all S, a<b<c<d.
bool satisfies_three_term_relations(const PluckerVector& p);

// π_C for C representing a point of Gr^{≥0}; rejects non-TNN input.
DecoratedPermutation decorated_permutation_of(const RatMatrix& c);

enum class GkMode { tnn, tp };

struct GkReport {
    GkMode mode = GkMode::tnn;
    int trials = 0;
    std::uint64_t seed = 0;
    bool row_space_ok = true;        // every sampled v passed
    bool complement_ok = true;       // every sampled w passed
    std::optional<std::vector<Rational>> row_witness;
    std::optional<std::vector<Rational>> complement_witness;
    bool exact_verdict = false;      // is_tnn / is_tp of the Plücker vector
    // A TNN/TP point never produces a failing sample.
    bool consistent() const { return !exact_verdict || (row_space_ok && complement_ok); }
};

// Sampled (one-sided) Gantmakher–Krein check. Candidates are random
// integer combinations of rows of C (resp. of a kernel basis) plus
// combinations vanishing on k-1 (resp. n-k-1) columns.
GkReport gk_test(const RatMatrix& c, GkMode mode, int trials, std::uint64_t seed);

}  // namespace positroid
