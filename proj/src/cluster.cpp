#include "positroid/cluster.hpp"

#include "positroid/amplituhedron.hpp"
#include "positroid/plabic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace positroid {

namespace {

std::vector<Arc> polygon_sides(const std::vector<int>& p) {
    std::vector<Arc> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(make_arc(p[i], p[(i + 1) % p.size()]));
    return out;
}

bool contains_all(const std::vector<int>& p, std::initializer_list<int> xs) {
    return std::all_of(xs.begin(), xs.end(), [&](int x) { return std::find(p.begin(), p.end(), x) != p.end(); });
}

RatMatrix standard_z(int n, int p) {
    std::vector<Rational> nodes;
    for (int i = 0; i < n; ++i) nodes.emplace_back(i);
    return make_positive_Z(n, p, nodes);
}

}  // namespace

int Seed::index_of(Arc a) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].arc == a) return static_cast<int>(i);
    return -1;
}

std::vector<std::pair<int, int>> Seed::arrows() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            for (int c = 0; c < b[i][j]; ++c) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::vector<Arc> default_distinguished(const BicoloredTriangulation& t) {
    std::vector<Arc> out;
    for (const auto& p : equivalence_class(t).black) {
        auto sides = polygon_sides(p);
        out.push_back(*std::min_element(sides.begin(), sides.end()));
    }
    return out;
}

Seed build_seed(const BicoloredTriangulation& t) { return build_seed(t, default_distinguished(t)); }

Seed build_seed(const BicoloredTriangulation& t, const std::vector<Arc>& distinguished) {
    const auto sub = equivalence_class(t);
    if (distinguished.size() != sub.black.size())
        throw std::invalid_argument("expected one distinguished arc per black polygon");
    std::set<Arc> frozen;
    for (std::size_t i = 0; i < sub.black.size(); ++i) {
        auto sides = polygon_sides(sub.black[i]);
        if (std::find(sides.begin(), sides.end(), distinguished[i]) == sides.end())
            throw std::invalid_argument("arc " + to_string(distinguished[i]) + " is not a boundary arc of its black polygon");
        frozen.insert(sides.begin(), sides.end());
    }
    auto polygon_of = [&](const Triangle& tr) {
        for (std::size_t i = 0; i < sub.black.size(); ++i)
            if (contains_all(sub.black[i], {tr.a, tr.b, tr.c})) return static_cast<int>(i);
        throw std::logic_error("black triangle outside every black polygon");
    };
    Seed s;
    s.k = t.black_count();
    s.n = t.n();
    std::map<Arc, int> polygon_of_arc;
    for (const auto& tr : t.triangles()) {
        if (tr.color != Color::black) continue;
        int p = polygon_of(tr);
        for (Arc a : {make_arc(tr.a, tr.b), make_arc(tr.b, tr.c), make_arc(tr.a, tr.c)}) polygon_of_arc[a] = p;
    }
    std::map<Arc, int> index;
    for (auto [a, p] : polygon_of_arc) {
        Arc d = distinguished[p];
        if (a == d) continue;
        int sign = (area(t, a) + area(t, d)) % 2 ? -1 : 1;
        auto e = std::make_shared<ClusterExpr>();
        e->var = ClusterVariable{a, d, sign};
        index[a] = static_cast<int>(s.vertices.size());
        s.vertices.push_back({a, frozen.count(a) > 0, e});
    }
    const std::size_t v = s.vertices.size();
    s.b.assign(v, std::vector<int>(v, 0));
    for (const auto& tr : t.triangles()) {
        if (tr.color != Color::black) continue;
        // clockwise: ab → bc → ca
        const Arc cyc[3] = {make_arc(tr.a, tr.b), make_arc(tr.b, tr.c), make_arc(tr.a, tr.c)};
        for (int i = 0; i < 3; ++i) {
            auto from = index.find(cyc[i]), to = index.find(cyc[(i + 1) % 3]);
            if (from == index.end() || to == index.end()) continue;
            if (s.vertices[from->second].frozen && s.vertices[to->second].frozen) continue;
            ++s.b[from->second][to->second];
            --s.b[to->second][from->second];
        }
    }
    return s;
}

std::optional<Rational> eval_cluster_var(const ClusterVariable& x, const RatMatrix& y, const RatMatrix& z) {
    Rational den = twistor(y, z, {x.distinguished.h, x.distinguished.j});
    if (sgn(den) == 0) return std::nullopt;
    return Rational(x.sign * twistor(y, z, {x.arc.h, x.arc.j}) / den);
}

std::optional<Rational> eval_expr(const ClusterExpr& e, const RatMatrix& y, const RatMatrix& z) {
    if (e.var) return eval_cluster_var(*e.var, y, z);
    auto product = [&](const std::vector<std::shared_ptr<const ClusterExpr>>& xs) -> std::optional<Rational> {
        Rational p = 1;
        for (const auto& x : xs) {
            auto v = eval_expr(*x, y, z);
            if (!v) return std::nullopt;
            p *= *v;
        }
        return p;
    };
    auto in = product(e.in), out = product(e.out), old = eval_expr(*e.old, y, z);
    if (!in || !out || !old || sgn(*old) == 0) return std::nullopt;
    return Rational((*in + *out) / *old);
}

std::optional<std::vector<Rational>> eval_cluster(const Seed& s, const RatMatrix& y, const RatMatrix& z) {
    std::vector<Rational> out;
    for (const auto& v : s.vertices) {
        auto x = eval_expr(*v.label, y, z);
        if (!x) return std::nullopt;
        out.push_back(*x);
    }
    return out;
}

Seed mutate(const Seed& s, int k) {
    if (k < 0 || k >= static_cast<int>(s.vertices.size())) throw std::invalid_argument("no such seed vertex");
    if (s.vertices[k].frozen) throw std::invalid_argument("cannot mutate at frozen vertex " + to_string(s.vertices[k].arc));
    Seed out = s;
    const std::size_t v = s.vertices.size();
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) {
            if (static_cast<int>(i) == k || static_cast<int>(j) == k) {
                out.b[i][j] = -s.b[i][j];
                continue;
            }
            if (s.vertices[i].frozen && s.vertices[j].frozen) continue;  // frozen pairs carry no arrows
            int bik = s.b[i][k], bkj = s.b[k][j];
            out.b[i][j] = s.b[i][j] + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
        }
    auto e = std::make_shared<ClusterExpr>();
    for (std::size_t i = 0; i < v; ++i) {
        for (int c = 0; c < s.b[i][k]; ++c) e->in.push_back(s.vertices[i].label);
        for (int c = 0; c < -s.b[i][k]; ++c) e->out.push_back(s.vertices[i].label);
    }
    e->old = s.vertices[k].label;
    out.vertices[k].label = e;
    return out;
}

std::string to_string(const ClusterVariable& x) {
    return std::string(x.sign < 0 ? "-" : "") + "x" + std::to_string(x.arc.h) + "," + std::to_string(x.arc.j) + "[" + to_string(x.distinguished) + "]";
}

std::string to_string(const ClusterExpr& e) {
    if (e.var) return to_string(*e.var);
    auto product = [](const std::vector<std::shared_ptr<const ClusterExpr>>& fs) {
        if (fs.empty()) return std::string("1");
        std::string out;
        for (const auto& f : fs) out += (out.empty() ? "" : "*") + (f->var ? to_string(*f) : "[" + to_string(*f) + "]");
        return out;
    };
    std::string old = e.old->var ? to_string(*e.old) : "[" + to_string(*e.old) + "]";
    return "(" + product(e.in) + " + " + product(e.out) + ")/" + old;
}

FlipCheck flip_mutation_check(const BicoloredTriangulation& t, int samples, std::uint64_t seed) {
    FlipCheck rep;
    const int k = t.black_count(), n = t.n();
    if (k == 0) return rep;
    auto z = standard_z(n, k + 2);
    auto ys = sample_amplituhedron(top_cell_graph(k, n), z, samples, seed);
    auto base = build_seed(t);
    const auto dist = default_distinguished(t);
    for (Arc a : t.diagonals()) {
        if (!is_mutable_arc(t, a)) continue;
        ++rep.arcs_checked;
        auto t2 = flip(t, a);
        auto flipped = build_seed(t2, dist);
        auto mutated = mutate(base, base.index_of(a));
        Arc added = [&] {
            auto before = t.diagonals();
            for (Arc d : t2.diagonals())
                if (std::find(before.begin(), before.end(), d) == before.end()) return d;
            throw std::logic_error("flip added no arc");
        }();
        // vertex i of `flipped` corresponds to perm[i] of `mutated`
        std::vector<int> perm;
        for (const auto& v : flipped.vertices) perm.push_back(v.arc == added ? base.index_of(a) : mutated.index_of(v.arc));
        const std::string where = t.to_string() + " at " + to_string(a);
        if (std::find(perm.begin(), perm.end(), -1) != perm.end() || flipped.vertices.size() != mutated.vertices.size()) {
            rep.ok = false;
            rep.violations.push_back("vertex sets differ after flip " + where);
            continue;
        }
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = 0; j < perm.size(); ++j)
                if (flipped.b[i][j] != mutated.b[perm[i]][perm[j]]) {
                    rep.ok = false;
                    rep.violations.push_back("quivers differ after flip " + where);
                    i = j = perm.size();
                    break;
                }
        for (const auto& y : ys) {
            auto x1 = eval_cluster(flipped, y.y, z), x2 = eval_cluster(mutated, y.y, z);
            if (!x1 || !x2) continue;
            ++rep.samples;
            for (std::size_t i = 0; i < perm.size(); ++i)
                if ((*x1)[i] != (*x2)[perm[i]]) {
                    rep.ok = false;
                    rep.violations.push_back("cluster variable " + to_string(flipped.vertices[i].arc) + " differs after flip " + where);
                    break;
                }
        }
    }
    return rep;
}

AdjacencyReport cluster_adjacency_check(const BicoloredTriangulation& t, int samples, std::uint64_t seed) {
    AdjacencyReport rep;
    const int k = t.black_count(), n = t.n();
    if (k == 0) return rep;
    auto z = standard_z(n, k + 2);
    auto g = hat_graph_of_triangulation(t);
    std::set<Arc> facet_arcs;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (image_dimension(g, z, 2, seed + e, {e}) != 2 * k - 1) continue;
        ++rep.facets;
        std::set<Arc> vanishing;
        bool first = true;
        for (int s = 0; s < 3; ++s) {
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(e) * 16 + s);
            auto w = random_weights(g, rng);
            w[e] = 0;
            auto y = amp_map(boundary_measurement(g, w), z);
            std::set<Arc> here;
            for (int h = 1; h <= n; ++h)
                for (int j = h + 1; j <= n; ++j)
                    if (sgn(twistor(y, z, {h, j})) == 0) here.insert({h, j});
            if (first) vanishing = here;
            std::set<Arc> both;
            std::set_intersection(vanishing.begin(), vanishing.end(), here.begin(), here.end(), std::inserter(both, both.end()));
            vanishing = both;
            first = false;
        }
        if (vanishing.empty()) {
            rep.ok = false;
            rep.violations.push_back("facet from edge " + std::to_string(e) + " lies on no twistor hypersurface");
        }
        facet_arcs.insert(vanishing.begin(), vanishing.end());
    }
    rep.facet_arcs.assign(facet_arcs.begin(), facet_arcs.end());
    for (std::size_t i = 0; i < rep.facet_arcs.size(); ++i)
        for (std::size_t j = i + 1; j < rep.facet_arcs.size(); ++j)
            if (arcs_cross(rep.facet_arcs[i], rep.facet_arcs[j])) {
                rep.ok = false;
                rep.violations.push_back("facet arcs " + to_string(rep.facet_arcs[i]) + " and " + to_string(rep.facet_arcs[j]) + " cross");
            }
    for (int h = 1; h <= n; ++h)
        for (int j = h + 1; j <= n; ++j) {
            Arc a{h, j};
            if (std::none_of(rep.facet_arcs.begin(), rep.facet_arcs.end(), [&](Arc f) { return arcs_cross(a, f); }))
                rep.compatible.push_back(a);
        }
    auto ys = sample_amplituhedron(g, z, samples, seed);
    for (Arc a : rep.compatible) {
        std::set<int> signs;
        for (const auto& y : ys) signs.insert(sgn(twistor(y.y, z, {a.h, a.j})));
        if (signs.size() != 1 || signs.count(0)) {
            rep.ok = false;
            rep.violations.push_back("compatible arc " + to_string(a) + " changes sign on the open tile");
        }
    }
    return rep;
}

}  // namespace positroid
