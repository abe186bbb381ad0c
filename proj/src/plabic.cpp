#include "positroid/plabic.hpp"

#include "positroid/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace positroid {

// ---- graph basics -----------------------------------------------------------

PlabicGraph::PlabicGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("boundary size out of range");
    vertices_.resize(n);
    for (auto& v : vertices_) v.boundary = true;
}

int PlabicGraph::add_vertex(Color c) {
    Vertex v;
    v.color = c;
    vertices_.push_back(v);
    return vertex_count() - 1;
}

int PlabicGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    edges_.push_back({u, v});
    int e = edge_count() - 1;
    vertices_[u].rotation.push_back(e);
    vertices_[v].rotation.push_back(e);
    return e;
}

void PlabicGraph::set_rotation(int v, std::vector<int> edges) {
    auto sorted_old = vertices_[v].rotation, sorted_new = edges;
    std::sort(sorted_old.begin(), sorted_old.end());
    std::sort(sorted_new.begin(), sorted_new.end());
    if (sorted_old != sorted_new) throw std::invalid_argument("rotation must permute the incident edges");
    vertices_[v].rotation = std::move(edges);
}

int PlabicGraph::position(int v, int e) const {
    const auto& r = vertices_[v].rotation;
    auto it = std::find(r.begin(), r.end(), e);
    if (it == r.end()) throw std::logic_error("edge not incident to vertex");
    return static_cast<int>(it - r.begin());
}

PlabicGraph PlabicGraph::from_neighbor_lists(int n, const std::vector<Color>& colors,
                                             const std::vector<std::vector<int>>& neighbors) {
    const int count = static_cast<int>(neighbors.size());
    if (count < n || static_cast<int>(colors.size()) != count) throw std::invalid_argument("vertex list does not match colors");
    PlabicGraph g(n);
    for (int v = n; v < count; ++v) g.add_vertex(colors[v]);
    // occurrence index of w in the list of v, paired with the same
    // occurrence index of v in the list of w
    std::map<std::pair<int, int>, std::vector<int>> pending;
    std::vector<std::vector<int>> rot(count);
    for (int v = 0; v < count; ++v) {
        std::map<int, int> seen;
        for (int w : neighbors[v]) {
            if (w < 0 || w >= count || w == v) throw std::invalid_argument("bad neighbour " + std::to_string(w) + " of vertex " + std::to_string(v));
            int occ = seen[w]++;
            auto key = std::make_pair(std::min(v, w), std::max(v, w));
            auto& list = pending[key];
            int e;
            if (v < w) {
                g.edges_.push_back({v, w});
                e = g.edge_count() - 1;
                list.push_back(e);
            } else {
                if (occ >= static_cast<int>(list.size())) throw std::invalid_argument("neighbour lists are not symmetric at " + std::to_string(v) + "-" + std::to_string(w));
                e = list[occ];
            }
            rot[v].push_back(e);
        }
    }
    for (int v = 0; v < count; ++v) g.vertices_[v].rotation = rot[v];
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges_[e];
        auto cu = std::count(rot[u].begin(), rot[u].end(), e), cv = std::count(rot[v].begin(), rot[v].end(), e);
        if (cu != 1 || cv != 1) throw std::invalid_argument("neighbour lists are not symmetric");
    }
    g.validate();
    return g;
}

std::vector<std::vector<int>> PlabicGraph::neighbor_lists() const {
    std::vector<std::vector<int>> out(vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        for (int e : vertices_[v].rotation) out[v].push_back(other_end(e, v));
    return out;
}

void PlabicGraph::validate() const {
    for (int b = 0; b < n_; ++b)
        if (degree(b) != 1) throw std::invalid_argument("boundary vertex " + std::to_string(b + 1) + " must have degree 1");
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[e];
        if (is_boundary(u) && is_boundary(v)) throw std::invalid_argument("edge joins two boundary vertices");
        if (u == v) throw std::invalid_argument("self-loop");
    }
    std::vector<char> reached(vertex_count(), 0);
    std::vector<int> stack;
    for (int b = 0; b < n_; ++b) {
        reached[b] = 1;
        stack.push_back(b);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : vertices_[v].rotation) {
            int w = other_end(e, v);
            if (!reached[w]) {
                reached[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = n_; v < vertex_count(); ++v) {
        if (!reached[v]) throw std::invalid_argument("internal vertex " + std::to_string(v) + " is not connected to the boundary");
        if (degree(v) == 0) throw std::invalid_argument("isolated internal vertex " + std::to_string(v));
        if (degree(v) == 1 && !is_boundary(other_end(vertices_[v].rotation[0], v)))
            throw std::invalid_argument("internal leaf " + std::to_string(v) + " is not a lollipop");
    }
}

bool PlabicGraph::is_bipartite_with_white_boundary() const {
    for (const auto& [u, v] : edges_) {
        if (is_boundary(u) || is_boundary(v)) {
            int w = is_boundary(u) ? v : u;
            if (is_boundary(w) || color(w) != Color::white) return false;
        } else if (color(u) == color(v)) {
            return false;
        }
    }
    return true;
}

bool PlabicGraph::is_black_trivalent() const {
    for (int v = n_; v < vertex_count(); ++v)
        if (color(v) == Color::black && degree(v) != 3) return false;
    return true;
}

bool PlabicGraph::has_parallel_edges() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges_)
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return true;
    return false;
}

// ---- editing ---------------------------------------------------------------

class GraphEditor {
public:
    explicit GraphEditor(const PlabicGraph& g)
        : n(g.n_), vs(g.vertices_), es(g.edges_), valive(vs.size(), 1), ealive(es.size(), 1) {}

    int n;
    std::vector<PlabicGraph::Vertex> vs;
    std::vector<PlabicGraph::Edge> es;
    std::vector<char> valive, ealive;

    int other(int e, int v) const { return es[e].u == v ? es[e].v : es[e].u; }
    bool boundary(int v) const { return v < n; }
    int pos(int v, int e) const {
        auto& r = vs[v].rotation;
        return static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
    }
    int new_vertex(Color c) {
        PlabicGraph::Vertex v;
        v.color = c;
        vs.push_back(v);
        valive.push_back(1);
        return static_cast<int>(vs.size()) - 1;
    }
    int new_edge(int u, int v) {
        es.push_back({u, v});
        ealive.push_back(1);
        return static_cast<int>(es.size()) - 1;
    }
    void reattach(int e, int from, int to) {
        if (es[e].u == from) es[e].u = to;
        else es[e].v = to;
    }
    // Vertex w of colour c inserted on edge e=(u,v); e keeps its u side.
    int subdivide(int e, Color c) {
        int u = es[e].u, v = es[e].v;
        int w = new_vertex(c);
        int e2 = new_edge(w, v);
        es[e].v = w;
        vs[v].rotation[pos(v, e)] = e2;
        vs[w].rotation = {e, e2};
        (void)u;
        return w;
    }
    void merge(int e) {
        int u = es[e].u, v = es[e].v;
        auto after = [&](int x) {
            std::vector<int> out;
            auto& r = vs[x].rotation;
            int p = pos(x, e), d = static_cast<int>(r.size());
            for (int i = 1; i < d; ++i) out.push_back(r[(p + i) % d]);
            return out;
        };
        auto ru = after(u), rv = after(v);
        for (int f : rv) reattach(f, v, u);
        ru.insert(ru.end(), rv.begin(), rv.end());
        vs[u].rotation = ru;
        vs[v].rotation.clear();
        valive[v] = 0;
        ealive[e] = 0;
    }
    int split(int v, int start, int length) {
        auto r = vs[v].rotation;
        int d = static_cast<int>(r.size());
        int u = new_vertex(vs[v].color);
        int f = new_edge(v, u);
        std::vector<int> block, rest;
        for (int i = 0; i < length; ++i) block.push_back(r[(start + i) % d]);
        for (int i = length; i < d; ++i) rest.push_back(r[(start + i) % d]);
        for (int e : block) reattach(e, v, u);
        vs[u].rotation = {f};
        vs[u].rotation.insert(vs[u].rotation.end(), block.begin(), block.end());
        vs[v].rotation = {f};
        vs[v].rotation.insert(vs[v].rotation.end(), rest.begin(), rest.end());
        return u;
    }
    void remove_degree2(int v) {
        int e1 = vs[v].rotation[0], e2 = vs[v].rotation[1];
        int b = other(e2, v);
        reattach(e1, v, b);
        vs[b].rotation[pos(b, e2)] = e1;
        ealive[e2] = 0;
        valive[v] = 0;
        vs[v].rotation.clear();
    }

    PlabicGraph finish() const {
        PlabicGraph g(n);
        std::vector<int> vmap(vs.size(), -1), emap(es.size(), -1);
        for (int v = 0; v < n; ++v) vmap[v] = v;
        int next = n;
        for (std::size_t v = n; v < vs.size(); ++v)
            if (valive[v]) vmap[v] = next++;
        int ne = 0;
        for (std::size_t e = 0; e < es.size(); ++e)
            if (ealive[e]) emap[e] = ne++;
        g.vertices_.resize(next);
        for (std::size_t v = 0; v < vs.size(); ++v) {
            if (!valive[v]) continue;
            auto& out = g.vertices_[vmap[v]];
            out.boundary = static_cast<int>(v) < n;
            out.color = vs[v].color;
            out.rotation.clear();
            for (int e : vs[v].rotation) out.rotation.push_back(emap[e]);
        }
        g.edges_.resize(ne);
        for (std::size_t e = 0; e < es.size(); ++e)
            if (ealive[e]) g.edges_[emap[e]] = {vmap[es[e].u], vmap[es[e].v]};
        return g;
    }
};

// ---- trips -------------------------------------------------------------------

std::vector<int> trip(const PlabicGraph& g, int label) {
    if (label < 1 || label > g.n()) throw std::invalid_argument("boundary label out of range");
    int b = label - 1;
    if (g.degree(b) != 1) throw std::invalid_argument("boundary vertex " + std::to_string(label) + " must have degree 1");
    int e = g.vertex(b).rotation[0];
    int v = g.other_end(e, b);
    std::vector<int> path{b, v};
    const int limit = 4 * g.edge_count() + 8;
    for (int step = 0; step < limit; ++step) {
        if (g.is_boundary(v)) return path;
        const auto& r = g.vertex(v).rotation;
        int d = static_cast<int>(r.size());
        int p = g.position(v, e);
        e = g.color(v) == Color::black ? r[(p + d - 1) % d] : r[(p + 1) % d];
        v = g.other_end(e, v);
        path.push_back(v);
    }
    throw std::logic_error("trip did not return to the boundary");
}

DecoratedPermutation trip_permutation(const PlabicGraph& g) {
    std::vector<int> images(g.n());
    std::vector<int> coloops;
    for (int i = 1; i <= g.n(); ++i) {
        auto path = trip(g, i);
        int end = path.back() + 1;
        images[i - 1] = end;
        if (end == i) {
            int first = g.other_end(g.vertex(i - 1).rotation[0], i - 1);
            if (g.color(first) == Color::white) coloops.push_back(i);
        }
    }
    return DecoratedPermutation(std::move(images), coloops);
}

// ---- faces -------------------------------------------------------------------

namespace {

// Corner (v, j) is the sector between slots j and j+1 of the extended
// rotation at v. Boundary vertices have slots {arc to previous boundary
// vertex, arc to next boundary vertex, leg}. Traversal leaves a corner
// through slot j+1; faces lie to the left, so bounded faces are walked
// counterclockwise.
struct Corner {
    int v;
    int j;
    int leave;  // slot used to leave
};

struct Faces {
    std::vector<std::vector<int>> face_of;  // [v][j]
    std::vector<std::vector<Corner>> faces;
    int outer = -1;
};

int ext_degree(const PlabicGraph& g, int v) { return g.is_boundary(v) ? 3 : g.degree(v); }

Faces compute_faces(const PlabicGraph& g) {
    const int n = g.n();
    Faces f;
    f.face_of.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) f.face_of[v].assign(ext_degree(g, v), -1);
    auto step = [&](int v, int j, int& s) -> std::pair<int, int> {
        int d = ext_degree(g, v);
        s = (j + 1) % d;
        if (g.is_boundary(v)) {
            if (s == 0) return {(v + n - 1) % n, 1};
            if (s == 1) return {(v + 1) % n, 0};
            int e = g.vertex(v).rotation[0];
            int u = g.other_end(e, v);
            return {u, g.position(u, e)};
        }
        int e = g.vertex(v).rotation[s];
        int u = g.other_end(e, v);
        return {u, g.is_boundary(u) ? 2 : g.position(u, e)};
    };
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int j = 0; j < ext_degree(g, v); ++j) {
            if (f.face_of[v][j] != -1) continue;
            int id = static_cast<int>(f.faces.size());
            f.faces.emplace_back();
            int cv = v, cj = j;
            while (f.face_of[cv][cj] == -1) {
                f.face_of[cv][cj] = id;
                int s;
                auto [nv, nj] = step(cv, cj, s);
                f.faces[id].push_back({cv, cj, s});
                cv = nv;
                cj = nj;
            }
        }
    f.outer = n > 0 ? f.face_of[0][0] : -1;
    return f;
}

}  // namespace

// ---- moves -------------------------------------------------------------------

std::string to_string(const MoveSite& m) {
    std::ostringstream os;
    switch (m.kind) {
        case MoveKind::square: os << "M1 square at"; for (int v : m.vertices) os << ' ' << v; break;
        case MoveKind::merge: os << "M2 merge along edge " << m.edge; break;
        case MoveKind::split: os << "M2 split vertex " << m.vertices.at(0) << " block " << m.start << "+" << m.length; break;
        case MoveKind::add_vertex: os << "M3 add " << to_string(m.color) << " vertex on edge " << m.edge; break;
        case MoveKind::remove_vertex: os << "M3 remove vertex " << m.vertices.at(0); break;
    }
    return os.str();
}

namespace {

int edge_between(const PlabicGraph& g, int a, int b) {
    int found = -1, count = 0;
    for (int e : g.vertex(a).rotation)
        if (g.other_end(e, a) == b) {
            found = e;
            ++count;
        }
    return count == 1 ? found : -1;
}

bool is_square_face(const PlabicGraph& g, const std::vector<int>& vs) {
    if (vs.size() != 4) return false;
    std::set<int> distinct(vs.begin(), vs.end());
    if (distinct.size() != 4) return false;
    for (int i = 0; i < 4; ++i) {
        int v = vs[i], w = vs[(i + 1) % 4];
        if (g.is_boundary(v) || g.degree(v) != 3 || g.color(v) == g.color(w) || edge_between(g, v, w) < 0) return false;
    }
    auto faces = compute_faces(g);
    for (std::size_t id = 0; id < faces.faces.size(); ++id) {
        const auto& face = faces.faces[id];
        if (static_cast<int>(id) == faces.outer || face.size() != 4) continue;
        std::vector<int> cyc;
        for (const auto& c : face) cyc.push_back(c.v);
        for (int shift = 0; shift < 4; ++shift) {
            bool fwd = true, bwd = true;
            for (int i = 0; i < 4; ++i) {
                fwd &= cyc[(shift + i) % 4] == vs[i];
                bwd &= cyc[(shift + 4 - i) % 4] == vs[i];
            }
            if (fwd || bwd) return true;
        }
    }
    return false;
}

bool is_lollipop_edge(const PlabicGraph& g, int e) {
    auto leaf = [&](int v) { return !g.is_boundary(v) && g.degree(v) == 1; };
    return leaf(g.edge(e).u) || leaf(g.edge(e).v);
}

void require(bool ok, const MoveSite& m, const std::string& why) {
    if (!ok) throw std::invalid_argument("move does not apply (" + to_string(m) + "): " + why);
}

}  // namespace

PlabicGraph apply_move(const PlabicGraph& g, const MoveSite& m) {
    GraphEditor ed(g);
    auto internal = [&](int v) { return v >= g.n() && v < g.vertex_count(); };
    switch (m.kind) {
        case MoveKind::square: {
            require(is_square_face(g, m.vertices), m, "not an alternating trivalent square face");
            for (int v : m.vertices) ed.vs[v].color = opposite(ed.vs[v].color);
            break;
        }
        case MoveKind::merge: {
            require(m.edge >= 0 && m.edge < g.edge_count(), m, "edge out of range");
            auto [u, v] = g.edge(m.edge);
            require(internal(u) && internal(v), m, "endpoints must be internal");
            require(g.color(u) == g.color(v), m, "endpoints have different colours");
            require(edge_between(g, u, v) == m.edge, m, "endpoints joined by several edges");
            ed.merge(m.edge);
            break;
        }
        case MoveKind::split: {
            require(m.vertices.size() == 1 && internal(m.vertices[0]), m, "vertex must be internal");
            int v = m.vertices[0], d = g.degree(v);
            require(d >= 2 && m.length >= 1 && m.length <= d - 1 && m.start >= 0 && m.start < d, m, "block out of range");
            ed.split(v, m.start, m.length);
            break;
        }
        case MoveKind::add_vertex: {
            require(m.edge >= 0 && m.edge < g.edge_count(), m, "edge out of range");
            require(!is_lollipop_edge(g, m.edge), m, "edge of a lollipop");
            ed.subdivide(m.edge, m.color);
            break;
        }
        case MoveKind::remove_vertex: {
            require(m.vertices.size() == 1 && internal(m.vertices[0]), m, "vertex must be internal");
            int v = m.vertices[0];
            require(g.degree(v) == 2, m, "vertex must have degree 2");
            int a = g.other_end(g.vertex(v).rotation[0], v), b = g.other_end(g.vertex(v).rotation[1], v);
            require(a != b, m, "both edges lead to the same vertex");
            require(!(g.is_boundary(a) && g.is_boundary(b)), m, "would join two boundary vertices");
            ed.remove_degree2(v);
            break;
        }
    }
    return ed.finish();
}

std::vector<MoveSite> applicable_moves(const PlabicGraph& g) {
    std::vector<MoveSite> out;
    auto faces = compute_faces(g);
    std::set<std::set<int>> squares;
    for (std::size_t id = 0; id < faces.faces.size(); ++id) {
        if (static_cast<int>(id) == faces.outer || faces.faces[id].size() != 4) continue;
        std::vector<int> vs;
        for (const auto& c : faces.faces[id]) vs.push_back(c.v);
        if (is_square_face(g, vs) && squares.insert({vs.begin(), vs.end()}).second)
            out.push_back({MoveKind::square, vs});
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!g.is_boundary(u) && !g.is_boundary(v) && g.color(u) == g.color(v) && edge_between(g, u, v) == e)
            out.push_back({MoveKind::merge, {}, e});
    }
    for (int v = g.n(); v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        for (int s = 0; s < d && d >= 2; ++s)
            for (int len = 1; len <= d - 1; ++len) out.push_back({MoveKind::split, {v}, -1, s, len});
        if (d == 2) {
            int a = g.other_end(g.vertex(v).rotation[0], v), b = g.other_end(g.vertex(v).rotation[1], v);
            if (a != b && !(g.is_boundary(a) && g.is_boundary(b))) out.push_back({MoveKind::remove_vertex, {v}});
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (is_lollipop_edge(g, e)) continue;
        for (Color c : {Color::black, Color::white}) out.push_back({MoveKind::add_vertex, {}, e, 0, 0, c});
    }
    return out;
}

std::string canonical_form(const PlabicGraph& g) {
    std::vector<int> label(g.vertex_count(), -1);
    std::vector<std::pair<int, int>> order;  // (vertex, discovery edge)
    std::function<void(int, int)> visit = [&](int v, int via) {
        label[v] = static_cast<int>(order.size());
        order.push_back({v, via});
        const auto& r = g.vertex(v).rotation;
        int d = static_cast<int>(r.size());
        int p = via < 0 ? 0 : g.position(v, via);
        for (int i = 0; i < d; ++i) {
            int e = r[(p + i) % d];
            int u = g.other_end(e, v);
            if (label[u] == -1) visit(u, e);
        }
    };
    for (int b = 0; b < g.n(); ++b)
        if (label[b] == -1) visit(b, g.degree(b) ? g.vertex(b).rotation[0] : -1);
    std::ostringstream os;
    os << g.n() << '|';
    for (auto [v, via] : order) {
        if (g.is_boundary(v)) os << 'b' << v + 1;
        else os << (g.color(v) == Color::black ? 'B' : 'W');
        os << ':';
        const auto& r = g.vertex(v).rotation;
        int d = static_cast<int>(r.size());
        int p = via < 0 ? 0 : g.position(v, via);
        for (int i = 0; i < d; ++i) os << label[g.other_end(r[(p + i) % d], v)] << ',';
        os << ';';
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (label[v] == -1) os << "?" << v;
    return os.str();
}

std::string to_string(Reducedness r) {
    switch (r) {
        case Reducedness::reduced: return "reduced";
        case Reducedness::not_reduced: return "not_reduced";
        case Reducedness::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Removes degree-2 vertices and splits vertices of degree > 3. Returns
// nullopt when a parallel edge appears on the way.
std::optional<PlabicGraph> trivalent_normal_form(PlabicGraph g) {
    while (true) {
        if (g.has_parallel_edges()) return std::nullopt;
        int target = -1;
        for (int v = g.n(); v < g.vertex_count() && target < 0; ++v)
            if (g.degree(v) == 2) target = v;
        if (target < 0) break;
        int a = g.other_end(g.vertex(target).rotation[0], target), b = g.other_end(g.vertex(target).rotation[1], target);
        if (a == b) return std::nullopt;
        if (g.is_boundary(a) && g.is_boundary(b)) break;
        g = apply_move(g, {MoveKind::remove_vertex, {target}});
    }
    while (true) {
        int target = -1;
        for (int v = g.n(); v < g.vertex_count() && target < 0; ++v)
            if (g.degree(v) > 3) target = v;
        if (target < 0) break;
        g = apply_move(g, {MoveKind::split, {target}, -1, 0, 2});
    }
    return g;
}

// Same-colour trivalent neighbours u,v: contract the edge and re-expand the
// degree-4 vertex along the other pairing.
PlabicGraph flip_edge(const PlabicGraph& g, int e) {
    GraphEditor ed(g);
    int u = g.edge(e).u;
    ed.merge(e);
    ed.split(u, 1, 2);
    return ed.finish();
}

}  // namespace

Reducedness is_reduced(const PlabicGraph& g, int depth) {
    if (g.has_parallel_edges()) return Reducedness::not_reduced;
    if (depth <= 0) return Reducedness::unknown;
    auto start = trivalent_normal_form(g);
    if (!start) return Reducedness::not_reduced;
    std::set<std::string> seen{canonical_form(*start)};
    std::vector<PlabicGraph> frontier{*start};
    for (int level = 0; level < depth; ++level) {
        std::vector<PlabicGraph> next;
        for (const auto& h : frontier) {
            std::vector<PlabicGraph> neighbours;
            for (const auto& m : applicable_moves(h))
                if (m.kind == MoveKind::square) neighbours.push_back(apply_move(h, m));
            for (int e = 0; e < h.edge_count(); ++e) {
                auto [u, v] = h.edge(e);
                if (h.is_boundary(u) || h.is_boundary(v) || h.color(u) != h.color(v)) continue;
                if (h.degree(u) != 3 || h.degree(v) != 3) continue;
                if (edge_between(h, u, v) != e) return Reducedness::not_reduced;
                neighbours.push_back(flip_edge(h, e));
            }
            for (auto& nb : neighbours) {
                if (nb.has_parallel_edges()) return Reducedness::not_reduced;
                if (seen.insert(canonical_form(nb)).second) next.push_back(std::move(nb));
            }
        }
        if (next.empty()) return Reducedness::reduced;
        frontier = std::move(next);
    }
    return Reducedness::unknown;
}

// ---- matchings -----------------------------------------------------------------

namespace {

struct MatchSearch {
    const PlabicGraph& g;
    std::vector<int> internal;
    std::vector<std::vector<int>> incident;  // sorted edge ids per vertex

    explicit MatchSearch(const PlabicGraph& graph) : g(graph) {
        for (int v = g.n(); v < g.vertex_count(); ++v) internal.push_back(v);
        incident.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            incident[v] = g.vertex(v).rotation;
            std::sort(incident[v].begin(), incident[v].end());
        }
    }

    struct State {
        std::vector<char> covered;
        std::vector<int> chosen;
        std::size_t cursor = 0;  // all internal vertices before cursor are covered
    };

    State initial() const { return {std::vector<char>(g.vertex_count(), 0), {}, 0}; }

    // Children of a state in deterministic order; empty children with
    // done=true means the state is a complete matching.
    bool expand(const State& s, std::vector<State>& children) const {
        std::size_t c = s.cursor;
        while (c < internal.size() && s.covered[internal[c]]) ++c;
        if (c == internal.size()) return true;
        int v = internal[c];
        for (int e : incident[v]) {
            int u = g.other_end(e, v);
            if (s.covered[u]) continue;
            State t = s;
            t.covered[v] = t.covered[u] = 1;
            t.chosen.push_back(e);
            t.cursor = c + 1;
            children.push_back(std::move(t));
        }
        return false;
    }

    Matching finish(const State& s) const {
        Matching m;
        m.edges = s.chosen;
        std::sort(m.edges.begin(), m.edges.end());
        for (int b = 0; b < g.n(); ++b)
            if (s.covered[b]) m.boundary = with(m.boundary, b + 1);
        return m;
    }

    void run(State& s, std::vector<Matching>& out) const {
        std::size_t c = s.cursor;
        while (c < internal.size() && s.covered[internal[c]]) ++c;
        if (c == internal.size()) {
            out.push_back(finish(s));
            return;
        }
        int v = internal[c];
        std::size_t saved = s.cursor;
        for (int e : incident[v]) {
            int u = g.other_end(e, v);
            if (s.covered[u]) continue;
            s.covered[v] = s.covered[u] = 1;
            s.chosen.push_back(e);
            s.cursor = c + 1;
            run(s, out);
            s.cursor = saved;
            s.chosen.pop_back();
            s.covered[v] = s.covered[u] = 0;
        }
    }
};

void require_matchable(const PlabicGraph& g) {
    if (!g.is_bipartite_with_white_boundary())
        throw std::invalid_argument("matchings require a bipartite graph with boundary vertices attached to white vertices");
}

}  // namespace

std::vector<Matching> matchings_serial(const PlabicGraph& g) {
    require_matchable(g);
    MatchSearch search(g);
    std::vector<Matching> out;
    auto s = search.initial();
    search.run(s, out);
    return out;
}

std::vector<Matching> matchings(const PlabicGraph& g) {
    require_matchable(g);
    MatchSearch search(g);
    const int threads = thread_count();
    if (threads <= 1 || search.internal.size() < 12) return matchings_serial(g);
    // Breadth-first prefix of the search tree; the frontier keeps DFS order.
    std::vector<MatchSearch::State> frontier{search.initial()};
    std::vector<Matching> done_early;
    std::vector<std::size_t> early_slot;  // frontier position each early result precedes
    for (int level = 0; level < 12 && frontier.size() < static_cast<std::size_t>(8 * threads); ++level) {
        std::vector<MatchSearch::State> next;
        for (const auto& s : frontier) {
            std::vector<MatchSearch::State> kids;
            if (search.expand(s, kids)) {
                done_early.push_back(search.finish(s));
                early_slot.push_back(next.size());
            }
            for (auto& k : kids) next.push_back(std::move(k));
        }
        if (next.empty()) break;
        frontier = std::move(next);
        if (!done_early.empty()) break;  // keep ordering simple: stop expanding
    }
    std::vector<std::vector<Matching>> parts(frontier.size());
    const long count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < count; ++i) {
        auto s = frontier[i];
        search.run(s, parts[i]);
    }
    std::vector<Matching> out;
    std::size_t e = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        while (e < done_early.size() && early_slot[e] == i) out.push_back(done_early[e++]);
        out.insert(out.end(), parts[i].begin(), parts[i].end());
    }
    while (e < done_early.size()) out.push_back(done_early[e++]);
    return out;
}

Bipartization bipartize(const PlabicGraph& g) {
    GraphEditor ed(g);
    const int original = g.edge_count();
    std::vector<int> primary(original);
    for (int e = 0; e < original; ++e) {
        primary[e] = e;
        auto [u, v] = g.edge(e);
        bool bu = g.is_boundary(u), bv = g.is_boundary(v);
        if (bu && bv) throw std::invalid_argument("edge joins two boundary vertices");
        if (bu || bv) {
            int w = bu ? v : u;
            if (g.color(w) == Color::black) ed.subdivide(e, Color::white);
        } else if (g.color(u) == g.color(v)) {
            ed.subdivide(e, opposite(g.color(u)));
        }
    }
    // subdivide keeps id e on the u side and appends new edges, so ids of
    // original edges survive compaction unchanged
    return {ed.finish(), primary};
}

WeightAssignment random_weights(const PlabicGraph& g, Rng& rng) {
    WeightAssignment w(g.edge_count());
    for (auto& x : w) x = rng.positive_weight();
    return w;
}

namespace {

struct Measured {
    Bipartization bip;
    std::vector<Matching> all;
    int k = 0;
};

Measured measure(const PlabicGraph& g) {
    g.validate();
    Measured m{bipartize(g), {}, 0};
    m.all = matchings(m.bip.graph);
    if (m.all.empty()) throw std::invalid_argument("graph has no almost perfect matching");
    m.k = size_of(m.all.front().boundary);
    for (const auto& x : m.all)
        if (size_of(x.boundary) != m.k) throw std::logic_error("matchings with different boundary sizes");
    return m;
}

std::vector<Rational> expanded_weights(const Measured& m, const WeightAssignment& w) {
    std::vector<Rational> full(m.bip.graph.edge_count(), Rational(1));
    for (std::size_t e = 0; e < w.size(); ++e) full[m.bip.primary[e]] = w[e];
    return full;
}

}  // namespace

Matroid positroid_of_graph(const PlabicGraph& g) {
    auto m = measure(g);
    Matroid out{m.k, g.n(), {}};
    for (const auto& x : m.all) out.bases.insert(x.boundary);
    return out;
}

PluckerVector boundary_measurement(const PlabicGraph& g, const WeightAssignment& w) {
    if (static_cast<int>(w.size()) != g.edge_count()) throw std::invalid_argument("one weight per edge required");
    for (const auto& x : w)
        if (sgn(x) < 0) throw std::invalid_argument("edge weights must be nonnegative");
    auto m = measure(g);
    auto full = expanded_weights(m, w);
    PluckerVector p(m.k, g.n());
    for (const auto& x : m.all) {
        Rational prod = 1;
        for (int e : x.edges) prod *= full[e];
        p[x.boundary] += prod;
    }
    if (p.is_zero()) throw std::invalid_argument("zero weights leave no perfect matching");
    if (!is_tnn(p)) throw std::logic_error("boundary measurement is not totally nonnegative");
    return p;
}

std::vector<std::vector<Rational>> measurement_jacobian(const PlabicGraph& g, const WeightAssignment& w,
                                                        const std::vector<int>& zero_edges) {
    if (static_cast<int>(w.size()) != g.edge_count()) throw std::invalid_argument("one weight per edge required");
    auto m = measure(g);
    auto full = expanded_weights(m, w);
    const int edges = g.edge_count();
    std::vector<int> original_of(m.bip.graph.edge_count(), -1);
    for (int e = 0; e < edges; ++e) original_of[m.bip.primary[e]] = e;
    std::vector<char> zero(edges, 0);
    for (int e : zero_edges) zero.at(e) = 1;
    std::vector<int> row_of(edges, -1);
    int rows = 1;
    for (int e = 0; e < edges; ++e)
        if (!zero[e]) row_of[e] = rows++;
    PluckerVector shape(m.k, g.n());
    std::vector<std::vector<Rational>> jac(rows, std::vector<Rational>(shape.coords().size(), Rational(0)));
    for (const auto& x : m.all) {
        bool dropped = std::any_of(x.edges.begin(), x.edges.end(), [&](int e) { return original_of[e] >= 0 && zero[original_of[e]]; });
        if (dropped) continue;
        Rational prod = 1;
        for (int e : x.edges) prod *= full[e];
        std::size_t col = shape.index_of(x.boundary);
        jac[0][col] += prod;
        for (int e : x.edges)
            if (original_of[e] >= 0) jac[row_of[original_of[e]]][col] += prod / full[e];
    }
    return jac;
}

int cell_dimension(const PlabicGraph& g, int trials, std::uint64_t seed) {
    int best = 0;
    for (int t = 0; t < std::max(trials, 1); ++t) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
        auto jac = measurement_jacobian(g, random_weights(g, rng));
        best = std::max(best, static_cast<int>(rank(RatMatrix::from_rows(jac))) - 1);
    }
    return best;
}

std::vector<PluckerVector> sample_cell_serial(const PlabicGraph& g, int count, std::uint64_t seed) {
    std::vector<PluckerVector> out;
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        out.push_back(boundary_measurement(g, random_weights(g, rng)));
    }
    return out;
}

std::vector<PluckerVector> sample_cell(const PlabicGraph& g, int count, std::uint64_t seed) {
    if (count <= 0) return {};
    auto m = measure(g);
    std::vector<PluckerVector> out(count);
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
        auto w = random_weights(g, rng);
        auto full = expanded_weights(m, w);
        PluckerVector p(m.k, g.n());
        for (const auto& x : m.all) {
            Rational prod = 1;
            for (int e : x.edges) prod *= full[e];
            p[x.boundary] += prod;
        }
        out[i] = std::move(p);
    }
    return out;
}

// ---- constructions ---------------------------------------------------------------

BridgeGraph graph_of_decorated_permutation(const DecoratedPermutation& p) {
    const int n = p.n();
    auto f = bounded_affine(p);
    std::vector<std::pair<int, int>> bridges;
    auto fixed = [&](int i) { return f[i - 1] == i || f[i - 1] == i + n; };
    while (true) {
        std::vector<int> live;
        for (int i = 1; i <= n; ++i)
            if (!fixed(i)) live.push_back(i);
        if (live.empty()) break;
        bool found = false;
        for (std::size_t t = 0; t < live.size() && !found; ++t) {
            int a = live[t], b = live[(t + 1) % live.size()];
            int fb = b > a ? f[b - 1] : f[b - 1] + n;
            if (f[a - 1] >= fb) continue;
            int fa = f[a - 1];
            if (b > a) {
                f[a - 1] = fb;
                f[b - 1] = fa;
            } else {
                f[a - 1] = fb;
                f[b - 1] = fa - n;
            }
            bridges.push_back({a, b});
            found = true;
        }
        if (!found) throw std::logic_error("no bridge found for a non-trivial affine permutation");
    }
    PlabicGraph g(n);
    std::vector<int> leg(n + 1);  // current edge hanging from boundary i
    for (int i = 1; i <= n; ++i) {
        int leaf = g.add_vertex(f[i - 1] == i ? Color::black : Color::white);
        leg[i] = g.add_edge(i - 1, leaf);
    }
    GraphEditor ed(g);
    // Vertex of colour c adjacent to boundary i, reusing a matching lollipop.
    auto attach = [&](int i, Color c) {
        int e = leg[i];
        int w = ed.other(e, i - 1);
        if (ed.vs[w].rotation.size() == 1 && ed.vs[w].color == c) return w;
        if (ed.vs[w].rotation.size() == 1) throw std::logic_error("bridge meets a lollipop of the wrong colour");
        // new vertex between boundary i and w; edge e stays on the boundary side
        if (ed.es[e].u != i - 1) std::swap(ed.es[e].u, ed.es[e].v);
        return ed.subdivide(e, c);
    };
    for (auto it = bridges.rbegin(); it != bridges.rend(); ++it) {
        auto [a, b] = *it;
        int wa = attach(a, Color::white);
        int wb = attach(b, Color::black);
        int br = ed.new_edge(wa, wb);
        // at a: boundary leg, bridge, inner; at b: boundary leg, inner, bridge
        auto place = [&](int v, bool bridge_second) {
            auto& r = ed.vs[v].rotation;
            int boundary_edge = leg[v == wa ? a : b];
            std::vector<int> rest;
            for (int e : r)
                if (e != boundary_edge) rest.push_back(e);
            std::vector<int> out{boundary_edge};
            if (bridge_second) {
                out.push_back(br);
                out.insert(out.end(), rest.begin(), rest.end());
            } else {
                out.insert(out.end(), rest.begin(), rest.end());
                out.push_back(br);
            }
            r = out;
        };
        place(wa, true);
        place(wb, false);
    }
    return {ed.finish(), static_cast<int>(bridges.size())};
}

PlabicGraph top_cell_graph(int k, int n) {
    // Stars for k = 1 and k = n-1: Plücker coordinates are single edge
    // weights, so samples are not skewed by long products of weights.
    if (n >= 3 && (k == 1 || k == n - 1)) {
        std::vector<Color> colors(n, Color::white);
        colors.push_back(k == 1 ? Color::white : Color::black);
        std::vector<std::vector<int>> nb;
        std::vector<int> hub;
        for (int i = 0; i < n; ++i) {
            nb.push_back({n});
            hub.push_back(i);
        }
        nb.push_back(hub);
        return PlabicGraph::from_neighbor_lists(n, colors, nb);
    }
    return graph_of_decorated_permutation(top_cell_permutation(k, n)).graph;
}

namespace {

std::mutex positroid_cache_mu;
std::map<DecoratedPermutation, Matroid>& positroid_cache() {
    static std::map<DecoratedPermutation, Matroid> cache;
    return cache;
}

}  // namespace

Matroid positroid_of_permutation(const DecoratedPermutation& p) {
    {
        std::lock_guard<std::mutex> lock(positroid_cache_mu);
        auto it = positroid_cache().find(p);
        if (it != positroid_cache().end()) return it->second;
    }
    auto m = positroid_of_graph(graph_of_decorated_permutation(p).graph);
    std::lock_guard<std::mutex> lock(positroid_cache_mu);
    positroid_cache().emplace(p, m);
    return m;
}

int dimension_of_permutation(const DecoratedPermutation& p) { return graph_of_decorated_permutation(p).bridges; }

PlabicGraph dual_graph_of_triangulation(const BicoloredTriangulation& t) {
    const int n = t.n();
    PlabicGraph g(n);
    const auto& tris = t.triangles();
    std::vector<int> vid(tris.size());
    for (std::size_t i = 0; i < tris.size(); ++i) vid[i] = g.add_vertex(tris[i].color);
    std::map<Arc, int> arc_edge;
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& tr = tris[i];
        for (Arc side : {Arc{tr.a, tr.b}, Arc{tr.b, tr.c}, Arc{tr.a, tr.c}}) {
            int e;
            auto it = arc_edge.find(side);
            if (it != arc_edge.end()) {
                e = it->second;
            } else {
                bool polygon_side = side.j == side.h + 1 || (side.h == 1 && side.j == n);
                if (polygon_side) {
                    int label = side.j == side.h + 1 ? side.h : n;
                    e = g.add_edge(label - 1, vid[i]);
                    rot[label - 1].push_back(e);
                } else {
                    auto on = t.triangles_on(side);
                    int other = on[0] == static_cast<int>(i) ? on[1] : on[0];
                    e = g.add_edge(vid[i], vid[other]);
                }
                arc_edge[side] = e;
            }
            rot[vid[i]].push_back(e);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) g.set_rotation(v, rot[v]);
    g.validate();
    return g;
}

PlabicGraph hat_graph_of_triangulation(const BicoloredTriangulation& t) {
    const int n = t.n();
    PlabicGraph g(n);
    std::vector<int> corner(n + 1);
    std::vector<std::vector<std::pair<int, int>>> around(n + 1);  // (sort key, edge)
    for (int i = 1; i <= n; ++i) {
        corner[i] = g.add_vertex(Color::black);
        int e = g.add_edge(i - 1, corner[i]);
        around[i].push_back({-1, e});
    }
    for (const auto& tr : t.triangles()) {
        if (tr.color != Color::black) continue;
        int w = g.add_vertex(Color::white);
        for (int x : {tr.a, tr.b, tr.c}) {
            int e = g.add_edge(w, corner[x]);
            int key = n;
            for (int y : {tr.a, tr.b, tr.c})
                if (y != x) key = std::min(key, (y - x - 1 + n) % n);
            around[x].push_back({key, e});
        }
    }
    for (int i = 1; i <= n; ++i) {
        std::sort(around[i].begin(), around[i].end());
        std::vector<int> r;
        for (auto [key, e] : around[i]) r.push_back(e);
        g.set_rotation(corner[i], r);
    }
    g.validate();
    return g;
}

PlabicGraph t_dual_graph(const PlabicGraph& g) {
    if (!g.is_black_trivalent()) throw std::invalid_argument("t_dual_graph requires a black-trivalent plabic graph");
    if (g.n() < 1) throw std::invalid_argument("t_dual_graph requires a boundary");
    g.validate();
    const int n = g.n();
    auto faces = compute_faces(g);
    PlabicGraph h(n);
    std::vector<int> face_vertex(faces.faces.size(), -1);
    for (std::size_t f = 0; f < faces.faces.size(); ++f)
        if (static_cast<int>(f) != faces.outer) face_vertex[f] = h.add_vertex(Color::black);
    std::map<int, int> white_over;
    for (int v = n; v < g.vertex_count(); ++v)
        if (g.color(v) == Color::black) white_over[v] = h.add_vertex(Color::white);
    std::map<std::pair<int, int>, int> corner_edge;
    std::vector<std::vector<int>> rot(h.vertex_count());
    for (std::size_t f = 0; f < faces.faces.size(); ++f) {
        if (static_cast<int>(f) == faces.outer) continue;
        std::vector<int> seq;
        for (const auto& c : faces.faces[f]) {
            if (g.is_boundary(c.v)) {
                if (c.leave == 0) {
                    // arc between boundary c.v and its predecessor: new label c.v+1
                    int e = h.add_edge(c.v, face_vertex[f]);
                    rot[c.v].push_back(e);
                    seq.push_back(e);
                }
            } else if (g.color(c.v) == Color::black) {
                int e = h.add_edge(white_over[c.v], face_vertex[f]);
                corner_edge[{c.v, c.j}] = e;
                seq.push_back(e);
            }
        }
        std::reverse(seq.begin(), seq.end());
        rot[face_vertex[f]] = seq;
    }
    for (auto [b, w] : white_over)
        for (int j = 0; j < g.degree(b); ++j) rot[w].push_back(corner_edge.at({b, j}));
    for (int v = 0; v < h.vertex_count(); ++v) h.set_rotation(v, rot[v]);
    h.validate();
    return h;
}

// ---- export ----------------------------------------------------------------------

namespace {

std::vector<std::pair<double, double>> layout(const PlabicGraph& g) {
    // Boundary on the unit circle clockwise from the top; internal vertices
    // by barycentric relaxation. Drawing only.
    const int n = g.n();
    std::vector<std::pair<double, double>> pos(g.vertex_count(), {0.0, 0.0});
    const double pi = std::acos(-1.0);
    for (int b = 0; b < n; ++b) {
        double a = pi / 2 - 2 * pi * b / std::max(n, 1);
        pos[b] = {std::cos(a), std::sin(a)};
    }
    for (int it = 0; it < 2000; ++it)
        for (int v = n; v < g.vertex_count(); ++v) {
            double x = 0, y = 0;
            for (int e : g.vertex(v).rotation) {
                auto [px, py] = pos[g.other_end(e, v)];
                x += px;
                y += py;
            }
            int d = std::max(g.degree(v), 1);
            double sx = x / d, sy = y / d;
            if (g.degree(v) == 1) {
                sx *= 0.8;
                sy *= 0.8;
            }
            pos[v] = {sx, sy};
        }
    return pos;
}

}  // namespace

std::string to_dot(const PlabicGraph& g) {
    std::ostringstream os;
    os << "graph plabic {\n  node [shape=circle, width=0.25, label=\"\"];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_boundary(v)) os << "  v" << v << " [shape=plaintext, label=\"" << v + 1 << "\"];\n";
        else os << "  v" << v << " [style=filled, fillcolor=" << (g.color(v) == Color::black ? "black" : "white") << "];\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) os << "  v" << g.edge(e).u << " -- v" << g.edge(e).v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_tikz(const PlabicGraph& g) {
    auto pos = layout(g);
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "\\begin{tikzpicture}[scale=2]\n  \\draw (0,0) circle (1);\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        os << "  \\draw (" << pos[u].first << "," << pos[u].second << ") -- (" << pos[v].first << "," << pos[v].second << ");\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [x, y] = pos[v];
        if (g.is_boundary(v))
            os << "  \\node at (" << 1.12 * x << "," << 1.12 * y << ") {$" << v + 1 << "$};\n";
        else
            os << "  \\draw[fill=" << (g.color(v) == Color::black ? "black" : "white") << "] (" << x << "," << y << ") circle (0.04);\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace positroid
