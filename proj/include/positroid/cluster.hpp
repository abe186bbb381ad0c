#pragma once

#include "positroid/matrix.hpp"
#include "positroid/triangulation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace positroid {

// x_ab = sign · ⟨Y Z_a Z_b⟩ / ⟨Y Z_h Z_j⟩ with sign = (-1)^{area(a→b) + area(h→j)}.
struct ClusterVariable {
    Arc arc;
    Arc distinguished;
    int sign = 1;
    bool operator==(const ClusterVariable&) const = default;
};

// Either an arc variable or the result of an exchange relation
// (Π in + Π out) / old.
struct ClusterExpr {
    std::optional<ClusterVariable> var;
    std::vector<std::shared_ptr<const ClusterExpr>> in, out;
    std::shared_ptr<const ClusterExpr> old;
};

struct SeedVertex {
    Arc arc;  // arc the vertex was created on
    bool frozen = false;
    std::shared_ptr<const ClusterExpr> label;
};

struct Seed {
    int k = 0;
    int n = 0;
    std::vector<SeedVertex> vertices;
    // b[i][j] = #arrows i→j − #arrows j→i
    std::vector<std::vector<int>> b;

    int index_of(Arc a) const;  // -1 if absent
    std::vector<std::pair<int, int>> arrows() const;
};

// Lexicographically smallest boundary arc of each black polygon of the
// class of t, in the order of equivalence_class(t).black.
std::vector<Arc> default_distinguished(const BicoloredTriangulation& t);
Seed build_seed(const BicoloredTriangulation& t, const std::vector<Arc>& distinguished);
Seed build_seed(const BicoloredTriangulation& t);

// nullopt when a denominator vanishes at Y.
std::optional<Rational> eval_cluster_var(const ClusterVariable& x, const RatMatrix& y, const RatMatrix& z);
std::optional<Rational> eval_expr(const ClusterExpr& e, const RatMatrix& y, const RatMatrix& z);
std::optional<std::vector<Rational>> eval_cluster(const Seed& s, const RatMatrix& y, const RatMatrix& z);

Seed mutate(const Seed& s, int vertex);
// "(x1 + x2*x3)/x4" for exchange expressions.
std::string to_string(const ClusterExpr& e);
std::string to_string(const ClusterVariable& x);  // "x3,7[5-7]"

struct FlipCheck {
    bool ok = true;
    int arcs_checked = 0;
    int samples = 0;
    std::vector<std::string> violations;
};
// For every mutable arc: quiver of build_seed(flip(t)) equals the mutated
// quiver and the evaluated clusters agree at `samples` points of the
// top cell.
FlipCheck flip_mutation_check(const BicoloredTriangulation& t, int samples, std::uint64_t seed);

struct AdjacencyReport {
    bool ok = true;
    std::vector<Arc> facet_arcs;   // vanishing twistors on facets of the tile
    std::vector<Arc> compatible;   // arcs crossing no facet arc
    int facets = 0;
    std::vector<std::string> violations;
};
// Facets are images of boundary cells of Ĝ(t) (one edge weight set to 0)
// with image dimension 2k-1.
AdjacencyReport cluster_adjacency_check(const BicoloredTriangulation& t, int samples, std::uint64_t seed);

}  // namespace positroid
