#include "positroid/hypersimplex.hpp"

#include "positroid/lp.hpp"
#include "positroid/parallel.hpp"
#include "positroid/plabic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace positroid {

std::vector<Rational> moment_map(const PluckerVector& p) {
    std::vector<Rational> mu(p.n(), Rational(0));
    Rational total = 0;
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
        Rational sq = p.coords()[i] * p.coords()[i];
        if (sgn(sq) == 0) continue;
        total += sq;
        for (int e : elements(p.subsets()[i])) mu[e - 1] += sq;
    }
    if (sgn(total) == 0) throw std::invalid_argument("moment map of the zero vector");
    for (auto& x : mu) x /= total;
    return mu;
}

std::vector<std::vector<int>> polytope_vertices(const Matroid& m) {
    std::vector<std::vector<int>> out;
    for (Subset b : m.sorted_bases()) {
        std::vector<int> v(m.n, 0);
        for (int e : elements(b)) v[e - 1] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

int affine_dimension(const std::vector<Subset>& points, int n) {
    if (points.empty()) return -1;
    RatMatrix diff(points.size() - 1, n);
    for (std::size_t r = 1; r < points.size(); ++r)
        for (int c = 0; c < n; ++c) diff(r - 1, c) = int(contains(points[r], c + 1)) - int(contains(points[0], c + 1));
    return points.size() == 1 ? 0 : static_cast<int>(rank(diff));
}

std::vector<int> cyclic_left_descents(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        if (w[i] < 1 || w[i] > n || pos[w[i]] != -1) throw std::invalid_argument("not a permutation");
        pos[w[i]] = i;
    }
    std::vector<int> out;
    if (n >= 2 && pos[1] < pos[n]) out.push_back(1);
    for (int i = 2; i <= n; ++i)
        if (pos[i] < pos[i - 1]) out.push_back(i);
    return out;
}

WSimplex make_wsimplex(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    WSimplex s{w, {}};
    for (int r = 1; r <= n; ++r) {
        int last = r == 1 ? n : r - 1;
        auto it = std::find(w.begin(), w.end(), last);
        if (it == w.end()) throw std::invalid_argument("not a permutation");
        std::vector<int> rot(it + 1, w.end());
        rot.insert(rot.end(), w.begin(), it + 1);
        s.vertices.push_back(subset_of(cyclic_left_descents(rot)));
    }
    return s;
}

std::string to_string(const WSimplex& s) {
    std::string out;
    for (int x : s.w) {
        if (s.w.size() > 9 && !out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

std::vector<WSimplex> enumerate_D(int k_plus_1, int n) {
    if (n < 2 || k_plus_1 < 1 || k_plus_1 > n - 1) throw std::invalid_argument("D_{k+1,n} needs 1 <= k+1 <= n-1");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<WSimplex> out;
    do {
        if (static_cast<int>(cyclic_left_descents(w).size()) == k_plus_1) out.push_back(make_wsimplex(w));
    } while (std::next_permutation(w.begin(), w.end() - 1));
    return out;
}

std::vector<Rational> barycenter(const WSimplex& s) {
    const int n = static_cast<int>(s.w.size());
    std::vector<Rational> x(n, Rational(0));
    for (Subset v : s.vertices)
        for (int e : elements(v)) x[e - 1] += 1;
    for (auto& c : x) c /= n;
    return x;
}

bool simplex_in_positroid(const WSimplex& s, const Matroid& m) {
    if (static_cast<int>(s.w.size()) != m.n) throw std::invalid_argument("simplex and matroid live on different ground sets");
    return std::all_of(s.vertices.begin(), s.vertices.end(), [&](Subset v) { return m.has_basis(v); });
}

namespace {

RatMatrix vertex_matrix(const WSimplex& s) {
    const int n = static_cast<int>(s.w.size());
    RatMatrix v(n, n);
    for (int c = 0; c < n; ++c)
        for (int e : elements(s.vertices[c])) v(e - 1, c) = 1;
    return v;
}

}  // namespace

StanleyAudit stanley_audit(int k_plus_1, int n) {
    StanleyAudit audit;
    auto ds = enumerate_D(k_plus_1, n);
    audit.simplices = ds.size();
    auto fail = [&](std::string msg) {
        audit.ok = false;
        audit.violations.push_back(std::move(msg));
    };
    if (Integer(static_cast<long>(ds.size())) != eulerian(k_plus_1 - 1, n - 1))
        fail("|D| = " + std::to_string(ds.size()) + " differs from the Eulerian number");
    std::vector<RatMatrix> inv(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        auto v = vertex_matrix(ds[i]);
        if (abs(det(v)) != k_plus_1) {
            fail("w-simplex " + to_string(ds[i]) + " is not unimodular");
            continue;
        }
        inv[i] = inverse(v);
        auto b = barycenter(ds[i]);
        Rational sum = 0;
        for (const auto& x : b) {
            sum += x;
            if (sgn(x) < 0 || x > 1) fail("barycenter of " + to_string(ds[i]) + " leaves the unit cube");
        }
        if (sum != k_plus_1) fail("barycenter of " + to_string(ds[i]) + " has the wrong coordinate sum");
    }
    if (!audit.ok) return audit;
    std::vector<int> hits(ds.size(), 0);
    const long count = static_cast<long>(ds.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count())
    for (long i = 0; i < count; ++i) {
        auto b = barycenter(ds[i]);
        RatMatrix col(b.size(), 1, b);
        for (std::size_t j = 0; j < ds.size(); ++j) {
            auto lam = inv[j] * col;
            bool inside = std::all_of(lam.entries().begin(), lam.entries().end(), [](const Rational& x) { return sgn(x) >= 0; });
            hits[i] += inside;
        }
    }
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (hits[i] != 1) fail("barycenter of " + to_string(ds[i]) + " lies in " + std::to_string(hits[i]) + " w-simplices");
    return audit;
}

bool point_in_polytope(const Matroid& m, const std::vector<Rational>& x) {
    auto verts = polytope_vertices(m);
    RatMatrix pts(verts.size(), m.n);
    for (std::size_t r = 0; r < verts.size(); ++r)
        for (int c = 0; c < m.n; ++c) pts(r, c) = verts[r][c];
    return in_convex_hull(pts, x);
}

// ---- tiles -------------------------------------------------------------------

namespace {

std::mutex catalog_mu;
std::map<std::pair<int, int>, std::vector<Tile>>& catalogs() {
    static std::map<std::pair<int, int>, std::vector<Tile>> c;
    return c;
}

}  // namespace

const std::vector<Tile>& tile_catalog(int k_plus_1, int n) {
    std::lock_guard<std::mutex> lock(catalog_mu);
    auto key = std::make_pair(k_plus_1, n);
    auto it = catalogs().find(key);
    if (it != catalogs().end()) return it->second;
    if (n < 3 || k_plus_1 < 1 || k_plus_1 > n - 1) throw std::invalid_argument("tile catalog needs 1 <= k+1 <= n-1, n >= 3");
    std::map<DecoratedPermutation, Tile> tiles;
    for (const auto& s : all_bicolored_subdivisions(k_plus_1 - 1, n)) {
        auto g = dual_graph_of_triangulation(representative(s));
        auto p = trip_permutation(g);
        tiles.emplace(p, Tile{p, positroid_of_graph(g), s});
    }
    std::vector<Tile> out;
    for (auto& [p, t] : tiles) out.push_back(std::move(t));
    return catalogs().emplace(key, std::move(out)).first->second;
}

std::vector<DecoratedPermutation> full_dimensional_cells(int k_plus_1, int n) {
    std::vector<DecoratedPermutation> out;
    for (const auto& p : decorated_permutations_of_type(k_plus_1, n)) {
        if (dimension_of_permutation(p) != n - 1) continue;
        auto m = positroid_of_permutation(p);
        if (affine_dimension(m.sorted_bases(), n) == n - 1) out.push_back(p);
    }
    return out;
}

const Tile* find_tile(int k_plus_1, int n, const DecoratedPermutation& p) {
    for (const auto& t : tile_catalog(k_plus_1, n))
        if (t.perm == p) return &t;
    return nullptr;
}

TilingReport verify_tiling(const std::vector<Matroid>& tiles, int k_plus_1, int n) {
    for (const auto& t : tiles)
        if (t.k != k_plus_1 || t.n != n) throw std::invalid_argument("tile of type (" + std::to_string(t.k) + "," + std::to_string(t.n) + ") in a tiling of Δ_{" + std::to_string(k_plus_1) + "," + std::to_string(n) + "}");
    TilingReport report;
    const auto& catalog = tile_catalog(k_plus_1, n);
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        bool known = std::any_of(catalog.begin(), catalog.end(), [&](const Tile& t) { return t.positroid == tiles[i]; });
        if (!known) {
            report.valid = false;
            report.violations.push_back("tile " + std::to_string(i + 1) + " " + tiles[i].to_string() + " is not a positroid tile");
        }
    }
    auto ds = enumerate_D(k_plus_1, n);
    report.cover_count.assign(ds.size(), 0);
    for (std::size_t w = 0; w < ds.size(); ++w) {
        for (const auto& t : tiles) report.cover_count[w] += simplex_in_positroid(ds[w], t);
        if (report.cover_count[w] != 1) {
            report.valid = false;
            report.violations.push_back("w-simplex " + to_string(ds[w]) + " is covered " + std::to_string(report.cover_count[w]) + " times");
        }
    }
    return report;
}

namespace {

struct CoverProblem {
    std::vector<const Tile*> tiles;
    std::vector<std::vector<int>> covers;     // w indices per tile
    std::vector<std::vector<int>> tiles_at;   // tile indices per w
    std::size_t w_count = 0;

    CoverProblem(int k_plus_1, int n) {
        const auto& catalog = tile_catalog(k_plus_1, n);
        auto ds = enumerate_D(k_plus_1, n);
        w_count = ds.size();
        tiles_at.resize(w_count);
        for (const auto& t : catalog) {
            std::vector<int> cov;
            for (std::size_t w = 0; w < ds.size(); ++w)
                if (simplex_in_positroid(ds[w], t.positroid)) cov.push_back(static_cast<int>(w));
            if (cov.empty()) continue;
            int id = static_cast<int>(tiles.size());
            for (int w : cov) tiles_at[w].push_back(id);
            tiles.push_back(&t);
            covers.push_back(std::move(cov));
        }
    }

    bool fits(const std::vector<char>& covered, int t) const {
        return std::none_of(covers[t].begin(), covers[t].end(), [&](int w) { return covered[w]; });
    }
    void mark(std::vector<char>& covered, int t, char v) const {
        for (int w : covers[t]) covered[w] = v;
    }

    void search(std::vector<char>& covered, std::vector<int>& chosen, std::vector<std::vector<int>>& out) const {
        std::size_t w = 0;
        while (w < w_count && covered[w]) ++w;
        if (w == w_count) {
            out.push_back(chosen);
            return;
        }
        for (int t : tiles_at[w]) {
            if (!fits(covered, t)) continue;
            mark(covered, t, 1);
            chosen.push_back(t);
            search(covered, chosen, out);
            chosen.pop_back();
            mark(covered, t, 0);
        }
    }
};

std::vector<Tiling> assemble(const CoverProblem& cp, int k_plus_1, int n, const std::vector<std::vector<int>>& covers) {
    std::vector<Tiling> out;
    for (const auto& c : covers) {
        Tiling t{k_plus_1, n, {}};
        for (int id : c) t.tiles.push_back(*cp.tiles[id]);
        std::sort(t.tiles.begin(), t.tiles.end(), [](const Tile& a, const Tile& b) { return a.perm < b.perm; });
        out.push_back(std::move(t));
    }
    auto key = [](const Tiling& t) {
        std::vector<DecoratedPermutation> ps;
        for (const auto& x : t.tiles) ps.push_back(x.perm);
        return ps;
    };
    std::sort(out.begin(), out.end(), [&](const Tiling& a, const Tiling& b) { return key(a) < key(b); });
    return out;
}

}  // namespace

std::vector<Tiling> enumerate_tilings_serial(int k_plus_1, int n) {
    CoverProblem cp(k_plus_1, n);
    std::vector<std::vector<int>> covers;
    std::vector<char> covered(cp.w_count, 0);
    std::vector<int> chosen;
    if (cp.w_count) cp.search(covered, chosen, covers);
    return assemble(cp, k_plus_1, n, covers);
}

std::vector<Tiling> enumerate_tilings(int k_plus_1, int n) {
    CoverProblem cp(k_plus_1, n);
    if (cp.w_count == 0) return {};
    const auto& first = cp.tiles_at[0];
    std::vector<std::vector<std::vector<int>>> parts(first.size());
    const long count = static_cast<long>(first.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long i = 0; i < count; ++i) {
        std::vector<char> covered(cp.w_count, 0);
        std::vector<int> chosen{first[i]};
        cp.mark(covered, first[i], 1);
        cp.search(covered, chosen, parts[i]);
    }
    std::vector<std::vector<int>> covers;
    for (auto& p : parts) covers.insert(covers.end(), p.begin(), p.end());
    return assemble(cp, k_plus_1, n, covers);
}

std::vector<TileInequality> tile_inequalities_hypersimplex(const BicoloredTriangulation& t) {
    auto s = equivalence_class(t);
    std::vector<TileInequality> out;
    for (Arc a : t.arcs()) {
        int ar = area(s, a);
        out.push_back({a, ar, ar + 1});
    }
    return out;
}

bool satisfies(const std::vector<TileInequality>& ineqs, const std::vector<Rational>& x) {
    for (const auto& q : ineqs) {
        Rational sum = 0;
        for (int i = q.arc.h; i < q.arc.j; ++i) sum += x.at(i - 1);
        if (sum < q.lower || sum > q.upper) return false;
    }
    return true;
}

std::vector<std::vector<Subset>> interior_walls(const std::vector<std::vector<Subset>>& cells, int n) {
    std::set<std::vector<Subset>> walls;
    int d = 0;
    for (const auto& c : cells) d = std::max(d, affine_dimension(c, n));
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            std::vector<Subset> a = cells[i], b = cells[j], common;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty() && affine_dimension(common, n) == d - 1) walls.insert(common);
        }
    return {walls.begin(), walls.end()};
}

// ---- counts --------------------------------------------------------------------

Integer eulerian(int k, int m) {
    Integer total = 0;
    for (int l = 0; l <= k + 1; ++l) {
        Integer base = k + 1 - l, power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m));
        Integer term = binomial(m + 1, l) * power;
        total += (l % 2 ? -term : term);
    }
    return total;
}

Integer narayana(int a, int b) {
    if (a <= 0) throw std::invalid_argument("narayana needs a positive first index");
    return binomial(a, b) * binomial(a, b - 1) / a;
}

Integer plane_partitions(int a, int b, int c) {
    Rational p = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int l = 1; l <= c; ++l) p *= make_rational(i + j + l - 1, i + j + l - 2);
    if (p.get_den() != 1) throw std::logic_error("plane partition count is not an integer");
    return p.get_num();
}

Integer interior_face_count(int k, int n, int c) {
    if (c < 1 || k < c || n - k < c) return 0;
    return factorial(n - c - 1) / (factorial(k - c) * factorial(n - k - c) * factorial(c - 1));
}

}  // namespace positroid
