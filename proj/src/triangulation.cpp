#include "positroid/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace positroid {

Arc make_arc(int x, int y) {
    if (x == y) throw std::invalid_argument("degenerate arc");
    return x < y ? Arc{x, y} : Arc{y, x};
}

bool arcs_cross(Arc a, Arc b) {
    auto inside = [&](int v) { return v > a.h && v < a.j; };
    auto outside = [&](int v) { return v < a.h || v > a.j; };
    return (inside(b.h) && outside(b.j)) || (outside(b.h) && inside(b.j));
}

std::string to_string(Arc a) { return std::to_string(a.h) + "-" + std::to_string(a.j); }

namespace {

bool is_side(Arc a, int n) { return a.j == a.h + 1 || (a.h == 1 && a.j == n); }

std::vector<Arc> sides_of(const Triangle& t) { return {Arc{t.a, t.b}, Arc{t.b, t.c}, Arc{t.a, t.c}}; }

Triangle make_triangle(int x, int y, int z, Color c) {
    int v[3] = {x, y, z};
    std::sort(v, v + 3);
    return {v[0], v[1], v[2], c};
}

}  // namespace

BicoloredTriangulation::BicoloredTriangulation(int n, std::vector<Triangle> triangles) : n_(n) {
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (auto& t : triangles) {
        t = make_triangle(t.a, t.b, t.c, t.color);
        if (t.a < 1 || t.c > n || t.a == t.b || t.b == t.c) throw std::invalid_argument("triangle vertices out of range");
    }
    std::sort(triangles.begin(), triangles.end());
    if (static_cast<int>(triangles.size()) != n - 2) throw std::invalid_argument("triangulation of an n-gon has n-2 triangles");
    std::map<Arc, int> uses;
    for (const auto& t : triangles)
        for (Arc a : sides_of(t)) ++uses[a];
    for (const auto& [a, count] : uses) {
        if (is_side(a, n) ? count != 1 : count != 2) throw std::invalid_argument("triangles do not triangulate the polygon (arc " + positroid::to_string(a) + ")");
    }
    for (auto it = uses.begin(); it != uses.end(); ++it)
        for (auto jt = std::next(it); jt != uses.end(); ++jt)
            if (arcs_cross(it->first, jt->first)) throw std::invalid_argument("crossing arcs in triangulation");
    triangles_ = std::move(triangles);
}

int BicoloredTriangulation::black_count() const {
    return static_cast<int>(std::count_if(triangles_.begin(), triangles_.end(), [](const Triangle& t) { return t.color == Color::black; }));
}

std::vector<Arc> BicoloredTriangulation::arcs() const {
    std::set<Arc> all;
    for (const auto& t : triangles_)
        for (Arc a : sides_of(t)) all.insert(a);
    return {all.begin(), all.end()};
}

std::vector<Arc> BicoloredTriangulation::diagonals() const {
    std::vector<Arc> out;
    for (Arc a : arcs())
        if (!is_side(a, n_)) out.push_back(a);
    return out;
}

std::vector<int> BicoloredTriangulation::triangles_on(Arc a) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < triangles_.size(); ++i)
        for (Arc s : sides_of(triangles_[i]))
            if (s == a) out.push_back(static_cast<int>(i));
    return out;
}

std::string BicoloredTriangulation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
        const auto& t = triangles_[i];
        if (i) out += ' ';
        out += (t.color == Color::black ? "B" : "W") + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
    }
    return out + "]";
}

int BicoloredSubdivision::k() const {
    int k = 0;
    for (const auto& p : black) k += static_cast<int>(p.size()) - 2;
    return k;
}

std::vector<Arc> BicoloredSubdivision::edges() const {
    std::set<Arc> out;
    for (const auto* group : {&black, &white})
        for (const auto& p : *group)
            for (std::size_t i = 0; i < p.size(); ++i) out.insert(make_arc(p[i], p[(i + 1) % p.size()]));
    return {out.begin(), out.end()};
}

std::string BicoloredSubdivision::to_string() const {
    std::string out = "black:";
    for (const auto& p : black) {
        out += " {";
        for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
        out += "}";
    }
    return out;
}

namespace {

void triangulate_range(const std::vector<int>& poly, std::vector<Triangle>& cur, std::vector<std::vector<Triangle>>& out,
                       std::vector<std::vector<int>> pending) {
    if (pending.empty()) {
        out.push_back(cur);
        return;
    }
    auto p = pending.back();
    pending.pop_back();
    if (p.size() < 3) {
        triangulate_range(poly, cur, out, pending);
        return;
    }
    // The side (first, last) lies in exactly one triangle; choose its apex.
    for (std::size_t t = 1; t + 1 < p.size(); ++t) {
        cur.push_back(make_triangle(p.front(), p[t], p.back(), Color::white));
        auto next = pending;
        next.emplace_back(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(t) + 1);
        next.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(t), p.end());
        triangulate_range(poly, cur, out, next);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Triangle>> all_triangulations(int n) {
    std::vector<int> poly(n);
    std::iota(poly.begin(), poly.end(), 1);
    std::vector<std::vector<Triangle>> out;
    std::vector<Triangle> cur;
    triangulate_range(poly, cur, out, {poly});
    for (auto& t : out) std::sort(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BicoloredTriangulation> all_bicolored_triangulations(int k, int n) {
    std::vector<BicoloredTriangulation> out;
    if (k < 0 || k > n - 2) return out;
    for (const auto& tri : all_triangulations(n)) {
        std::vector<int> choose(tri.size(), 0);
        std::fill(choose.end() - k, choose.end(), 1);
        do {
            auto colored = tri;
            for (std::size_t i = 0; i < colored.size(); ++i) colored[i].color = choose[i] ? Color::black : Color::white;
            out.emplace_back(n, colored);
        } while (std::next_permutation(choose.begin(), choose.end()));
    }
    return out;
}

BicoloredSubdivision equivalence_class(const BicoloredTriangulation& t) {
    const auto& tris = t.triangles();
    std::vector<int> parent(tris.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Arc d : t.diagonals()) {
        auto on = t.triangles_on(d);
        if (tris[on[0]].color == tris[on[1]].color) parent[find(on[0])] = find(on[1]);
    }
    std::map<int, std::set<int>> groups;
    std::map<int, Color> color;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        int r = find(static_cast<int>(i));
        groups[r].insert({tris[i].a, tris[i].b, tris[i].c});
        color[r] = tris[i].color;
    }
    BicoloredSubdivision s;
    s.n = t.n();
    for (const auto& [r, verts] : groups) (color[r] == Color::black ? s.black : s.white).emplace_back(verts.begin(), verts.end());
    std::sort(s.black.begin(), s.black.end());
    std::sort(s.white.begin(), s.white.end());
    return s;
}

BicoloredTriangulation representative(const BicoloredSubdivision& s) {
    std::vector<Triangle> tris;
    for (const auto* group : {&s.black, &s.white}) {
        Color c = group == &s.black ? Color::black : Color::white;
        for (const auto& p : *group)
            for (std::size_t i = 1; i + 1 < p.size(); ++i) tris.push_back(make_triangle(p[0], p[i], p[i + 1], c));
    }
    return BicoloredTriangulation(s.n, tris);
}

BicoloredSubdivision subdivision_from_black_polygons(int n, const std::vector<std::vector<int>>& black) {
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::vector<std::vector<int>> polys;
    std::set<Arc> chords;
    for (auto p : black) {
        std::sort(p.begin(), p.end());
        if (p.size() < 3 || std::adjacent_find(p.begin(), p.end()) != p.end() || p.front() < 1 || p.back() > n)
            throw std::invalid_argument("black polygon must have at least 3 distinct vertices in [1,n]");
        for (std::size_t i = 0; i < p.size(); ++i) {
            Arc a = make_arc(p[i], p[(i + 1) % p.size()]);
            if (!is_side(a, n)) chords.insert(a);
        }
        polys.push_back(std::move(p));
    }
    for (auto it = chords.begin(); it != chords.end(); ++it)
        for (auto jt = std::next(it); jt != chords.end(); ++jt)
            if (arcs_cross(*it, *jt)) throw std::invalid_argument("black polygons overlap");
    std::vector<std::vector<int>> regions{{}};
    for (int i = 1; i <= n; ++i) regions[0].push_back(i);
    for (Arc c : chords) {
        for (std::size_t r = 0; r < regions.size(); ++r) {
            auto& reg = regions[r];
            auto ih = std::find(reg.begin(), reg.end(), c.h);
            auto ij = std::find(reg.begin(), reg.end(), c.j);
            if (ih == reg.end() || ij == reg.end()) continue;
            if (ij - ih == 1 || (ih == reg.begin() && ij + 1 == reg.end())) continue;
            std::vector<int> inner(ih, ij + 1);
            std::vector<int> outer(reg.begin(), ih + 1);
            outer.insert(outer.end(), ij, reg.end());
            reg = std::move(inner);
            regions.push_back(std::move(outer));
            break;
        }
    }
    std::set<std::vector<int>> black_set(polys.begin(), polys.end());
    std::vector<Triangle> tris;
    std::size_t matched = 0;
    for (const auto& reg : regions) {
        bool is_black = black_set.count(reg) != 0;
        matched += is_black;
        for (std::size_t i = 1; i + 1 < reg.size(); ++i)
            tris.push_back(make_triangle(reg[0], reg[i], reg[i + 1], is_black ? Color::black : Color::white));
    }
    if (matched != black_set.size()) throw std::invalid_argument("black polygons overlap or contain one another");
    return equivalence_class(BicoloredTriangulation(n, tris));
}

std::vector<BicoloredSubdivision> all_bicolored_subdivisions(int k, int n) {
    std::set<BicoloredSubdivision> out;
    for (const auto& t : all_bicolored_triangulations(k, n)) out.insert(equivalence_class(t));
    return {out.begin(), out.end()};
}

bool arc_compatible(const BicoloredSubdivision& s, Arc a) {
    if (a.h < 1 || a.j > s.n || a.h >= a.j) return false;
    for (Arc e : s.edges())
        if (arcs_cross(a, e)) return false;
    return true;
}

int area(const BicoloredSubdivision& s, Arc a) {
    if (!arc_compatible(s, a)) throw std::invalid_argument("arc " + to_string(a) + " is not compatible with the subdivision");
    int total = 0;
    for (const auto& p : s.black) {
        int left = static_cast<int>(std::count_if(p.begin(), p.end(), [&](int v) { return v >= a.h && v <= a.j; }));
        total += std::max(0, left - 2);
    }
    return total;
}

int area(const BicoloredTriangulation& t, Arc a) { return area(equivalence_class(t), a); }

bool is_mutable_arc(const BicoloredTriangulation& t, Arc a) {
    auto on = t.triangles_on(a);
    return on.size() == 2 && t.triangles()[on[0]].color == Color::black && t.triangles()[on[1]].color == Color::black;
}

BicoloredTriangulation flip(const BicoloredTriangulation& t, Arc a) {
    if (!is_mutable_arc(t, a)) throw std::invalid_argument("arc " + to_string(a) + " is not internal to a black polygon");
    auto on = t.triangles_on(a);
    auto apex = [&](const Triangle& tr) { return tr.a != a.h && tr.a != a.j ? tr.a : (tr.b != a.h && tr.b != a.j ? tr.b : tr.c); };
    int x = apex(t.triangles()[on[0]]), y = apex(t.triangles()[on[1]]);
    std::vector<Triangle> tris;
    for (std::size_t i = 0; i < t.triangles().size(); ++i)
        if (static_cast<int>(i) != on[0] && static_cast<int>(i) != on[1]) tris.push_back(t.triangles()[i]);
    tris.push_back(make_triangle(x, y, a.h, Color::black));
    tris.push_back(make_triangle(x, y, a.j, Color::black));
    return BicoloredTriangulation(t.n(), tris);
}

}  // namespace positroid
