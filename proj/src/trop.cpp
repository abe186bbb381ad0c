#include "positroid/trop.hpp"

#include "positroid/hypersimplex.hpp"
#include "positroid/lp.hpp"
#include "positroid/matrix.hpp"
#include "positroid/plabic.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace positroid {

HeightVector::HeightVector(int k_, int n_) : k(k_), n(n_), heights(binomial(n_, k_).get_ui(), Rational(0)) {
    if (k < 0 || k > n || n < 1 || n > kMaxN) throw std::invalid_argument("height vector type out of range");
}

HeightVector::HeightVector(int k_, int n_, std::vector<Rational> h) : HeightVector(k_, n_) {
    if (h.size() != heights.size())
        throw std::invalid_argument("expected " + std::to_string(heights.size()) + " heights, got " + std::to_string(h.size()));
    heights = std::move(h);
}

const Rational& HeightVector::operator[](Subset s) const { return heights.at(lex_rank(s, n)); }
Rational& HeightVector::operator[](Subset s) { return heights.at(lex_rank(s, n)); }

std::string TropicalViolation::to_string() const {
    return "(S={" + subset_label(s) + "};a,b,c,d=" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
}

std::optional<TropicalViolation> positivity_violation(const HeightVector& p) {
    if (p.k < 2 || p.n - p.k < 2) return std::nullopt;
    for (Subset s : k_subsets(p.n, p.k - 2))
        for (int a = 1; a <= p.n; ++a) {
            if (contains(s, a)) continue;
            for (int b = a + 1; b <= p.n; ++b) {
                if (contains(s, b)) continue;
                for (int c = b + 1; c <= p.n; ++c) {
                    if (contains(s, c)) continue;
                    for (int d = c + 1; d <= p.n; ++d) {
                        if (contains(s, d)) continue;
                        auto h = [&](int x, int y) { return p[with(with(s, x), y)]; };
                        Rational lhs = h(a, c) + h(b, d);
                        Rational rhs = std::min(h(a, b) + h(c, d), h(a, d) + h(b, c));
                        if (lhs != rhs) return TropicalViolation{s, a, b, c, d};
                    }
                }
            }
        }
    return std::nullopt;
}

bool is_positive_tropical(const HeightVector& p) { return !positivity_violation(p).has_value(); }

namespace {

Rational slack(const HeightVector& p, Subset s, const std::vector<Rational>& y) {
    Rational v = p[s];
    for (int e : elements(s)) v -= y[e - 1];
    return v;
}

std::optional<SubdivisionCell> cell_at(const HeightVector& p, const std::vector<Subset>& all, const std::vector<Rational>& x) {
    RatMatrix a(p.n, all.size());
    std::vector<Rational> c(all.size());
    for (std::size_t j = 0; j < all.size(); ++j) {
        for (int e : elements(all[j])) a(e - 1, j) = 1;
        c[j] = p[all[j]];
    }
    auto res = minimize(a, x, c);
    if (res.status != LpStatus::optimal) return std::nullopt;
    SubdivisionCell cell;
    cell.witness = res.dual;
    for (Subset s : all)
        if (sgn(slack(p, s, cell.witness)) == 0) cell.vertices.push_back(s);
    return cell;
}

// Facets of a full-dimensional cell that are not on the boundary of Δ.
std::vector<std::vector<Subset>> interior_facets(const std::vector<Subset>& verts, int n) {
    std::set<std::vector<Subset>> facets;
    const std::size_t m = verts.size();
    std::vector<int> pick(n - 1);
    // enumerate (n-1)-subsets of the vertex list
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + std::min<std::size_t>(n - 1, m), true);
    if (m < static_cast<std::size_t>(n - 1)) return {};
    do {
        std::vector<Subset> chosen;
        for (std::size_t i = 0; i < m; ++i)
            if (mask[i]) chosen.push_back(verts[i]);
        // unknowns (a_1..a_n, beta): a·e_I - beta = 0 on chosen, Σ a = 0
        RatMatrix sys(chosen.size() + 1, n + 1);
        for (std::size_t r = 0; r < chosen.size(); ++r) {
            for (int e : elements(chosen[r])) sys(r, e - 1) = 1;
            sys(r, n) = -1;
        }
        for (int c = 0; c < n; ++c) sys(chosen.size(), c) = 1;
        auto ker = kernel_basis(sys);
        if (ker.rows() != 1) continue;
        auto h = ker.row(0);
        bool all_zero = std::all_of(h.begin(), h.begin() + n, [](const Rational& v) { return sgn(v) == 0; });
        if (all_zero) continue;
        int side = 0;
        bool ok = true;
        std::vector<Subset> on;
        for (Subset v : verts) {
            Rational val = -h[n];
            for (int e : elements(v)) val += h[e - 1];
            int s = sgn(val);
            if (s == 0) {
                on.push_back(v);
            } else if (side == 0) {
                side = s;
            } else if (side != s) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        bool boundary = false;
        for (int i = 1; i <= n && !boundary; ++i) {
            bool all_in = std::all_of(on.begin(), on.end(), [&](Subset v) { return contains(v, i); });
            bool all_out = std::none_of(on.begin(), on.end(), [&](Subset v) { return contains(v, i); });
            boundary = all_in || all_out;
        }
        if (!boundary) facets.insert(on);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return {facets.begin(), facets.end()};
}

std::vector<Rational> centroid(const std::vector<Subset>& verts, int n) {
    std::vector<Rational> x(n, Rational(0));
    for (Subset v : verts)
        for (int e : elements(v)) x[e - 1] += 1;
    for (auto& c : x) c /= static_cast<long>(verts.size());
    return x;
}

bool inside_hypersimplex(const std::vector<Rational>& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) >= 0 && v <= 1; });
}

void sort_cells(Subdivision& d) {
    std::sort(d.cells.begin(), d.cells.end(), [](const SubdivisionCell& a, const SubdivisionCell& b) {
        return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(), lex_less);
    });
}

}  // namespace

Subdivision regular_subdivision(const HeightVector& p, std::uint64_t seed) {
    Subdivision out{p.k, p.n, {}};
    if (p.k == 0 || p.k == p.n) {
        out.cells.push_back({k_subsets(p.n, p.k), std::vector<Rational>(p.n, Rational(0))});
        if (p.k == p.n) out.cells.back().witness.assign(p.n, p.heights[0] / p.n);
        return out;
    }
    const auto all = k_subsets(p.n, p.k);
    const int full = p.n - 1;
    Rng rng(seed);
    std::optional<SubdivisionCell> start;
    for (int attempt = 0; attempt < 64 && !start; ++attempt) {
        std::vector<Rational> x(p.n, make_rational(p.k, p.n));
        Rational total = 0;
        for (int i = 0; i + 1 < p.n; ++i) {
            Rational d = make_rational(rng.uniform_int(-1000, 1000), 1000L * p.n * 4);
            x[i] += d;
            total += d;
        }
        x[p.n - 1] -= total;
        if (!inside_hypersimplex(x)) continue;
        auto c = cell_at(p, all, x);
        if (c && affine_dimension(c->vertices, p.n) == full) start = c;
    }
    if (!start) throw std::runtime_error("no generic start point found");
    std::set<std::vector<Subset>> seen{start->vertices};
    std::deque<SubdivisionCell> queue{*start};
    while (!queue.empty()) {
        auto cell = queue.front();
        queue.pop_front();
        auto bc = centroid(cell.vertices, p.n);
        for (const auto& f : interior_facets(cell.vertices, p.n)) {
            auto bf = centroid(f, p.n);
            Rational eps = make_rational(1, 2);
            bool crossed = false;
            for (int step = 0; step < 40 && !crossed; ++step, eps /= 2) {
                std::vector<Rational> x(p.n);
                for (int i = 0; i < p.n; ++i) x[i] = bf[i] + eps * (bf[i] - bc[i]);
                if (!inside_hypersimplex(x)) continue;
                auto next = cell_at(p, all, x);
                if (!next || next->vertices == cell.vertices) continue;
                if (affine_dimension(next->vertices, p.n) != full) continue;
                if (!std::includes(next->vertices.begin(), next->vertices.end(), f.begin(), f.end(), lex_less)) continue;
                crossed = true;
                if (seen.insert(next->vertices).second) queue.push_back(*next);
            }
            if (!crossed) throw std::runtime_error("could not cross an interior facet");
        }
        out.cells.push_back(std::move(cell));
    }
    sort_cells(out);
    return out;
}

Subdivision regular_subdivision_oracle(const HeightVector& p) {
    Subdivision out{p.k, p.n, {}};
    const auto all = k_subsets(p.n, p.k);
    const int n = p.n;
    if (p.k == 0 || p.k == n || all.size() < static_cast<std::size_t>(n)) return regular_subdivision(p);
    std::set<std::vector<Subset>> seen;
    std::vector<bool> mask(all.size(), false);
    std::fill(mask.begin(), mask.begin() + n, true);
    do {
        std::vector<Subset> chosen;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask[i]) chosen.push_back(all[i]);
        RatMatrix m(n, n);
        std::vector<Rational> rhs(n);
        for (int r = 0; r < n; ++r) {
            for (int e : elements(chosen[r])) m(r, e - 1) = 1;
            rhs[r] = p[chosen[r]];
        }
        if (rank(m) < static_cast<std::size_t>(n)) continue;
        auto y = solve(m, rhs);
        std::vector<Subset> tight;
        bool lower = true;
        for (Subset s : all) {
            int sg = sgn(slack(p, s, y));
            if (sg < 0) {
                lower = false;
                break;
            }
            if (sg == 0) tight.push_back(s);
        }
        if (lower && seen.insert(tight).second) out.cells.push_back({tight, y});
    } while (std::prev_permutation(mask.begin(), mask.end()));
    sort_cells(out);
    return out;
}

namespace {

std::mutex positroid_set_mu;
const std::set<std::set<Subset>>& positroid_basis_sets(int k, int n) {
    static std::map<std::pair<int, int>, std::set<std::set<Subset>>> cache;
    std::lock_guard<std::mutex> lock(positroid_set_mu);
    auto key = std::make_pair(k, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::set<std::set<Subset>> out;
    for (const auto& perm : decorated_permutations_of_type(k, n)) out.insert(positroid_of_permutation(perm).bases);
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

bool faces_are_positroids(const Subdivision& d) {
    const auto& known = positroid_basis_sets(d.k, d.n);
    std::vector<std::vector<Subset>> cells;
    for (const auto& c : d.cells) {
        if (!known.count({c.vertices.begin(), c.vertices.end()})) return false;
        cells.push_back(c.vertices);
    }
    for (const auto& w : interior_walls(cells, d.n))
        if (!known.count({w.begin(), w.end()})) return false;
    return true;
}

bool is_finest(const Subdivision& d) {
    if (d.k < 1 || d.k > d.n - 1) return d.cells.size() == 1;
    return Integer(static_cast<long>(d.cells.size())) == binomial(d.n - 2, d.k - 1);
}

bool octahedra_subdivided(const Subdivision& d) {
    if (d.k < 2 || d.n - d.k < 2) return true;
    std::vector<std::set<Subset>> cells;
    for (const auto& c : d.cells) cells.emplace_back(c.vertices.begin(), c.vertices.end());
    for (Subset s : k_subsets(d.n, d.k - 2)) {
        std::vector<int> free;
        for (int i = 1; i <= d.n; ++i)
            if (!contains(s, i)) free.push_back(i);
        const std::size_t f = free.size();
        for (std::size_t a = 0; a < f; ++a)
            for (std::size_t b = a + 1; b < f; ++b)
                for (std::size_t c = b + 1; c < f; ++c)
                    for (std::size_t e = c + 1; e < f; ++e) {
                        int q[4] = {free[a], free[b], free[c], free[e]};
                        std::vector<Subset> oct;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) oct.push_back(with(with(s, q[i]), q[j]));
                        for (const auto& cell : cells)
                            if (std::all_of(oct.begin(), oct.end(), [&](Subset v) { return cell.count(v) != 0; })) return false;
                    }
    }
    return true;
}

HeightVector random_positive_tropical(int k, int n, Rng& rng) {
    auto g = top_cell_graph(k, n);
    auto bip = bipartize(g);
    std::vector<Rational> h(bip.graph.edge_count(), Rational(0));
    for (int e = 0; e < g.edge_count(); ++e) h[bip.primary[e]] = rng.uniform_int(0, 20);
    HeightVector p(k, n);
    std::vector<bool> set(p.heights.size(), false);
    for (const auto& m : matchings(bip.graph)) {
        Rational total = 0;
        for (int e : m.edges) total += h[e];
        std::size_t i = lex_rank(m.boundary, n);
        if (!set[i] || total < p.heights[i]) p.heights[i] = total;
        set[i] = true;
    }
    if (std::find(set.begin(), set.end(), false) != set.end()) throw std::logic_error("top cell graph misses a basis");
    return p;
}

}  // namespace positroid
