#pragma once

#include "positroid/color.hpp"

#include <compare>
#include <string>
#include <vector>

namespace positroid {

struct Arc {
    int h = 0;
    int j = 0;  // h < j
    auto operator<=>(const Arc&) const = default;
};

Arc make_arc(int x, int y);
// Chords of the n-gon cross iff their endpoints interleave strictly.
bool arcs_cross(Arc a, Arc b);
std::string to_string(Arc a);  // "2-5"

struct Triangle {
    int a = 0, b = 0, c = 0;  // a < b < c
    Color color = Color::white;
    auto operator<=>(const Triangle&) const = default;
};

class BicoloredTriangulation {
public:
    BicoloredTriangulation() = default;
    // Validates that the triangles triangulate the convex n-gon.
    BicoloredTriangulation(int n, std::vector<Triangle> triangles);

    int n() const { return n_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    int black_count() const;
    // Polygon sides and diagonals, sorted.
    std::vector<Arc> arcs() const;
    std::vector<Arc> diagonals() const;
    // Indices of the triangles having this arc as a side.
    std::vector<int> triangles_on(Arc a) const;
    std::string to_string() const;

    bool operator==(const BicoloredTriangulation&) const = default;

private:
    int n_ = 0;
    std::vector<Triangle> triangles_;  // sorted
};

// Polygons as increasing vertex lists.
struct BicoloredSubdivision {
    int n = 0;
    std::vector<std::vector<int>> black;
    std::vector<std::vector<int>> white;

    int k() const;
    // Sides of all polygons, sorted and deduplicated.
    std::vector<Arc> edges() const;
    std::string to_string() const;
    bool operator==(const BicoloredSubdivision&) const = default;
    auto operator<=>(const BicoloredSubdivision&) const = default;
};

std::vector<std::vector<Triangle>> all_triangulations(int n);  // uncolored (white)
std::vector<BicoloredTriangulation> all_bicolored_triangulations(int k, int n);

BicoloredSubdivision equivalence_class(const BicoloredTriangulation& t);
// Canonical subdivision whose black region is the union of the given
// polygons (adjacent black polygons are merged).
BicoloredSubdivision subdivision_from_black_polygons(int n, const std::vector<std::vector<int>>& black);
// Fan triangulation of every polygon from its smallest vertex.
BicoloredTriangulation representative(const BicoloredSubdivision& s);
std::vector<BicoloredSubdivision> all_bicolored_subdivisions(int k, int n);

// Black triangles on the side of h→j containing h+1, …, j-1. Throws when
// the arc crosses an edge of the subdivision.
int area(const BicoloredSubdivision& s, Arc a);
int area(const BicoloredTriangulation& t, Arc a);
bool arc_compatible(const BicoloredSubdivision& s, Arc a);

// Diagonal whose two triangles are both black.
bool is_mutable_arc(const BicoloredTriangulation& t, Arc a);
BicoloredTriangulation flip(const BicoloredTriangulation& t, Arc a);

}  // namespace positroid
