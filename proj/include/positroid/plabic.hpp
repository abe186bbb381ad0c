#pragma once

#include "positroid/color.hpp"
#include "positroid/decorated_perm.hpp"
#include "positroid/grassmann.hpp"
#include "positroid/matroid.hpp"
#include "positroid/random.hpp"
#include "positroid/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace positroid {

// Planar bicolored graph in a disk. Vertices 0..n-1 are the boundary
// vertices 1..n (clockwise); the embedding is the rotation system: the
// clockwise cyclic order of incident edge ids at every vertex.
class PlabicGraph {
public:
    struct Vertex {
        bool boundary = false;
        Color color = Color::white;  // meaningless for boundary vertices
        std::vector<int> rotation;
    };
    struct Edge {
        int u = -1;
        int v = -1;
    };

    explicit PlabicGraph(int n = 0);

    // Neighbour lists in clockwise order; colors ignored for boundary
    // vertices. Parallel edges are paired in order of appearance.
    static PlabicGraph from_neighbor_lists(int n, const std::vector<Color>& colors,
                                           const std::vector<std::vector<int>>& neighbors);
    std::vector<std::vector<int>> neighbor_lists() const;

    int n() const { return n_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    bool is_boundary(int v) const { return v < n_; }
    Color color(int v) const { return vertices_[v].color; }
    int degree(int v) const { return static_cast<int>(vertices_[v].rotation.size()); }
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
    // Position of edge e in the rotation at v.
    int position(int v, int e) const;

    int add_vertex(Color c);
    // Appends e at the end of both rotations.
    int add_edge(int u, int v);
    void set_rotation(int v, std::vector<int> edges);

    // Throws std::invalid_argument describing the first violation.
    void validate() const;
    bool is_bipartite_with_white_boundary() const;
    bool is_black_trivalent() const;
    bool has_parallel_edges() const;

private:
    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;

    friend class GraphEditor;
};

// ---- trips ----------------------------------------------------------------

// Boundary-to-boundary path from label i: maximally right at black,
// maximally left at white. Returns visited vertices.
std::vector<int> trip(const PlabicGraph& g, int label);
DecoratedPermutation trip_permutation(const PlabicGraph& g);

// ---- moves ----------------------------------------------------------------

enum class MoveKind { square, merge, split, add_vertex, remove_vertex };

struct MoveSite {
    MoveKind kind = MoveKind::square;
    std::vector<int> vertices;  // square: the 4-cycle in order; split/remove: {v}
    int edge = -1;              // merge / add_vertex
    int start = 0;              // split: first rotation position moved
    int length = 0;             // split: number of edges moved
    Color color = Color::white; // add_vertex
};

std::string to_string(const MoveSite& m);
PlabicGraph apply_move(const PlabicGraph& g, const MoveSite& m);
// Every applicable site of every kind (splits of all contiguous blocks,
// additions of both colors).
std::vector<MoveSite> applicable_moves(const PlabicGraph& g);

// Embedding-aware canonical string; equal iff isomorphic as plabic graphs
// (boundary labels fixed).
std::string canonical_form(const PlabicGraph& g);

enum class Reducedness { reduced, not_reduced, unknown };
std::string to_string(Reducedness r);
// Search over the move class restricted to trivalent representatives
// (square moves and flips of same-colour edges), after removing degree-2
// vertices and splitting high-degree vertices.
Reducedness is_reduced(const PlabicGraph& g, int depth);

// ---- matchings and boundary measurement ------------------------------------

struct Matching {
    std::vector<int> edges;  // sorted edge ids
    Subset boundary = 0;
};

// Requires is_bipartite_with_white_boundary().
std::vector<Matching> matchings(const PlabicGraph& g);
std::vector<Matching> matchings_serial(const PlabicGraph& g);

// Inserts degree-2 vertices so internal edges join opposite colours and
// boundary vertices attach to white vertices. primary[e] is the edge of
// the result that carries the weight of original edge e.
struct Bipartization {
    PlabicGraph graph;
    std::vector<int> primary;
};
Bipartization bipartize(const PlabicGraph& g);

using WeightAssignment = std::vector<Rational>;  // indexed by edge id
WeightAssignment random_weights(const PlabicGraph& g, Rng& rng);

// Bipartizes when needed.
Matroid positroid_of_graph(const PlabicGraph& g);
// Zero weights delete edges (points of the closure of S_G).
PluckerVector boundary_measurement(const PlabicGraph& g, const WeightAssignment& w);
// Rows [p; ∂p/∂w_e for every edge e] at w. Edges listed in zero_edges get
// weight 0 (matchings through them drop out) and no row.
std::vector<std::vector<Rational>> measurement_jacobian(const PlabicGraph& g, const WeightAssignment& w,
                                                        const std::vector<int>& zero_edges = {});
// Jacobian rank of weights ↦ projective boundary measurement, maximised
// over trials.
int cell_dimension(const PlabicGraph& g, int trials, std::uint64_t seed);

// Batch sampling of S_G: sample i uses Rng::stream(seed, i). Parallel over
// samples; the serial version is the reference.
std::vector<PluckerVector> sample_cell(const PlabicGraph& g, int count, std::uint64_t seed);
std::vector<PluckerVector> sample_cell_serial(const PlabicGraph& g, int count, std::uint64_t seed);

// ---- constructions ---------------------------------------------------------

// Reduced graph for π built from adjacent bridges on the bounded affine
// permutation; bridge_count() of the result equals the cell dimension.
struct BridgeGraph {
    PlabicGraph graph;
    int bridges = 0;
};
BridgeGraph graph_of_decorated_permutation(const DecoratedPermutation& p);
// Reduced graph for the top cell of Gr_{k,n}^{≥0}.
PlabicGraph top_cell_graph(int k, int n);
Matroid positroid_of_permutation(const DecoratedPermutation& p);
int dimension_of_permutation(const DecoratedPermutation& p);

// G(T): a vertex per triangle, boundary vertex i on side (i, i+1).
PlabicGraph dual_graph_of_triangulation(const BicoloredTriangulation& t);
// Ĝ(T): a black vertex per polygon vertex i with a leg to boundary i, a
// white vertex in each black triangle joined to its corners.
PlabicGraph hat_graph_of_triangulation(const BicoloredTriangulation& t);
// Plabic T-duality; requires a black-trivalent graph.
PlabicGraph t_dual_graph(const PlabicGraph& g);

// ---- export ----------------------------------------------------------------

std::string to_dot(const PlabicGraph& g);
std::string to_tikz(const PlabicGraph& g);

}  // namespace positroid
