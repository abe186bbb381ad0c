#pragma once

#include "positroid/grassmann.hpp"
#include "positroid/hypersimplex.hpp"
#include "positroid/matrix.hpp"
#include "positroid/plabic.hpp"
#include "positroid/sign.hpp"
#include "positroid/triangulation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace positroid {

// Z is n×(k+m) with all maximal minors positive; Y is k×(k+m).

// Rows (1, t_i, …, t_i^{p-1}) for strictly increasing nodes; positivity of
// every maximal minor is asserted.
RatMatrix make_positive_Z(int n, int p, const std::vector<Rational>& nodes);
bool all_maximal_minors_positive(const RatMatrix& z);
// Rows (Z_2, …, Z_n, (-1)^{p-1} Z_1).
RatMatrix twisted_shift(const RatMatrix& z);
// Ẑ_i = (-1)^{p-1} Z_i.
std::vector<Rational> hat_row(const RatMatrix& z, int i);
std::vector<Rational> z_row(const RatMatrix& z, int i);

RatMatrix amp_map(const RatMatrix& c, const RatMatrix& z);
// Through the chart representative of p (rows scaled by 1/p_{I0}).
RatMatrix amp_map(const PluckerVector& p, const RatMatrix& z);

// det of Y's rows stacked over the given rows.
Rational twistor_of_rows(const RatMatrix& y, const std::vector<std::vector<Rational>>& rows);
// ⟨Y Z_{i_1} … Z_{i_m}⟩ with 1-based indices in the order given.
Rational twistor(const RatMatrix& y, const RatMatrix& z, const std::vector<int>& indices);
// Σ_J p_J(C) ⟨Z_J Z_I⟩.
Rational twistor_expand(const PluckerVector& c, const RatMatrix& z, const std::vector<int>& indices);

// Projective signs of all ⟨Y Z_I⟩, I in lexicographic order.
SignVector sign_stratum(const RatMatrix& y, const RatMatrix& z);
bool m1_membership(const RatMatrix& y, const RatMatrix& z);
bool m2_interior_test(const RatMatrix& y, const RatMatrix& z);
// Sign conditions for interior points of the amplituhedron at any m plus
// var(⟨Y Z_1 … Z_{m-1} Z_j⟩, j = m..n) = k.
bool general_m_boundary_signs(const RatMatrix& y, const RatMatrix& z);

// (-1)^{area(h→j)} ⟨Y Z_h Z_j⟩ > 0 (>= 0 when closed) over all arcs of T.
bool tile_membership_m2(const RatMatrix& y, const RatMatrix& z, const BicoloredTriangulation& t, bool strict = true);

enum class ChamberVerdict { inside, outside, boundary };
std::string to_string(ChamberVerdict v);
ChamberVerdict w_chamber_membership(const RatMatrix& y, const RatMatrix& z, const WSimplex& ws);

struct AmpSample {
    PluckerVector c;
    RatMatrix y;
};
// Points Z̃(C) for C sampled from S_G; sample i uses stream (seed, i).
std::vector<AmpSample> sample_amplituhedron(const PlabicGraph& g, const RatMatrix& z, int count, std::uint64_t seed);

struct AmpTilingReport {
    bool valid = true;
    int k = 0;
    int n = 0;
    std::vector<DecoratedPermutation> dual_perms;  // trip permutations of G(T)
    TilingReport hypersimplex;
    int samples = 0;
    int boundary_samples = 0;
    int uncovered = 0;
    int overlapping = 0;
    std::vector<std::string> violations;
    // Twistor tables ⟨Y Z_i Z_j⟩ (lexicographic) of up to 5 offending samples.
    std::vector<std::vector<Rational>> witnesses;
};
// T-dual check on Δ_{k+1,n} plus a sampled audit: interior samples lie in
// exactly one open tile.
AmpTilingReport verify_amp_tiling_m2(const std::vector<BicoloredTriangulation>& tiles, const RatMatrix& z,
                                     int samples = 200, std::uint64_t seed = 0);

// X = Z·ker(Y) = rowspan(C)^⊥ ∩ colspan(Z); p_I(X) against ⟨Y Z_I⟩.
struct BPointReport {
    bool ok = false;
    int dim_x = 0;
    std::vector<Rational> plucker_x;  // m-subsets in lexicographic order
    std::vector<Rational> twistors;
};
BPointReport b_point(const RatMatrix& c, const RatMatrix& z);

// k = 1, m = 1: the cells spanned by e_i + e_{i+1}, i = 1..n-1, whose images
// are the segments [Z_i, Z_{i+1}] of the line A_{n,1,1}.
std::vector<DecoratedPermutation> m1_segment_tiling(int n);
// k = 1 with |support| = k+m: Y = Σ_{j∈support} c_j Z_j with all c_j of
// one strict sign.
bool k1_open_cone_membership(const RatMatrix& y, const RatMatrix& z, Subset support);

// Rank of the Jacobian of weights ↦ Plücker vector of Y = CZ (projective),
// maximised over trials. Edges in zero_edges are set to 0.
int image_dimension(const PlabicGraph& g, const RatMatrix& z, int trials, std::uint64_t seed,
                    const std::vector<int>& zero_edges = {});

}  // namespace positroid
