#pragma once

#include "positroid/decorated_perm.hpp"
#include "positroid/grassmann.hpp"
#include "positroid/matroid.hpp"
#include "positroid/triangulation.hpp"

#include <string>
#include <vector>

namespace positroid {

// μ(V) = Σ p_I² e_I / Σ p_I².
std::vector<Rational> moment_map(const PluckerVector& p);

// Indicator vectors e_B of the bases.
std::vector<std::vector<int>> polytope_vertices(const Matroid& m);
// Affine dimension of the convex hull of {e_I}.
int affine_dimension(const std::vector<Subset>& points, int n);

// One-line permutation w of [n].
std::vector<int> cyclic_left_descents(const std::vector<int>& w);

// Δ_w: vertices e_{I_1}, …, e_{I_n} with I_r the cyclic left descents of
// the rotation of w ending in r-1.
struct WSimplex {
    std::vector<int> w;
    std::vector<Subset> vertices;
};
WSimplex make_wsimplex(const std::vector<int>& w);
std::string to_string(const WSimplex& s);  // "1324"
// D_{k+1,n}: w_n = n and k+1 cyclic descents, lexicographic in w.
std::vector<WSimplex> enumerate_D(int k_plus_1, int n);
std::vector<Rational> barycenter(const WSimplex& s);
bool simplex_in_positroid(const WSimplex& s, const Matroid& m);

// Barycenters in Δ, unimodular simplices, each barycenter in exactly one
// simplex, and |D_{k+1,n}| equal to the Eulerian number.
struct StanleyAudit {
    bool ok = true;
    std::size_t simplices = 0;
    std::vector<std::string> violations;
};
StanleyAudit stanley_audit(int k_plus_1, int n);

// Exact point-in-polytope test by LP (cross-validation oracle).
bool point_in_polytope(const Matroid& m, const std::vector<Rational>& x);

// ---- tiles and tilings -------------------------------------------------------

struct Tile {
    DecoratedPermutation perm;
    Matroid positroid;
    BicoloredSubdivision subdivision;
};

// Positroids of G(T) over bicolored subdivisions of type (k, n), as tiles of
// Δ_{k+1,n}; sorted by decorated permutation. Cached.
const std::vector<Tile>& tile_catalog(int k_plus_1, int n);
// Decorated permutations of type (k+1, n) with an (n-1)-dimensional cell
// and a full-dimensional polytope.
std::vector<DecoratedPermutation> full_dimensional_cells(int k_plus_1, int n);
const Tile* find_tile(int k_plus_1, int n, const DecoratedPermutation& p);

struct TilingReport {
    bool valid = true;
    std::vector<int> cover_count;  // per w in enumerate_D order
    std::vector<std::string> violations;
};
TilingReport verify_tiling(const std::vector<Matroid>& tiles, int k_plus_1, int n);

struct Tiling {
    int k_plus_1 = 0;
    int n = 0;
    std::vector<Tile> tiles;  // sorted by decorated permutation
};
// Exact covers of D_{k+1,n} by catalog tiles; parallel over the tile
// covering the first w-simplex. Sorted.
std::vector<Tiling> enumerate_tilings(int k_plus_1, int n);
std::vector<Tiling> enumerate_tilings_serial(int k_plus_1, int n);

// area(h→j) ≤ x_h + … + x_{j-1} ≤ area(h→j) + 1 over the arcs of T.
struct TileInequality {
    Arc arc;
    int lower = 0;
    int upper = 0;
};
std::vector<TileInequality> tile_inequalities_hypersimplex(const BicoloredTriangulation& t);
bool satisfies(const std::vector<TileInequality>& ineqs, const std::vector<Rational>& x);

// Distinct pairwise intersections of cells whose affine dimension is
// dim(cells) - 1.
std::vector<std::vector<Subset>> interior_walls(const std::vector<std::vector<Subset>>& cells, int n);

// ---- counts --------------------------------------------------------------------

// E_{k,m} = Σ_{l=0}^{k+1} (-1)^l C(m+1, l) (k+1-l)^m.
Integer eulerian(int k, int m);
// N_{a,b} = (1/a) C(a, b) C(a, b-1).
Integer narayana(int a, int b);
// Π_{i≤a, j≤b, l≤c} (i+j+l-1)/(i+j+l-2).
Integer plane_partitions(int a, int b, int c);
// (n-c-1)! / ((k-c)! (n-k-c)! (c-1)!)
Integer interior_face_count(int k, int n, int c);

}  // namespace positroid
