#include "positroid/amplituhedron.hpp"

#include "positroid/parallel.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace positroid {

namespace {

void check_shapes(const RatMatrix& y, const RatMatrix& z) {
    if (y.cols() != z.cols()) throw std::invalid_argument("Y and Z have different widths");
    if (y.rows() > z.cols()) throw std::invalid_argument("Y has more rows than columns");
}

int m_of(const RatMatrix& y, const RatMatrix& z) { return static_cast<int>(z.cols() - y.rows()); }

std::vector<int> zero_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(x - 1);
    return out;
}

// Start positions i_1 < … < i_r of disjoint consecutive pairs {i, i+1}
// inside [lo, hi].
void pair_sets(int r, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == r) {
            std::vector<int> idx;
            for (int i : cur) {
                idx.push_back(i);
                idx.push_back(i + 1);
            }
            visit(idx);
            return;
        }
        for (int i = from; i + 1 <= hi; ++i) {
            cur.push_back(i);
            rec(i + 2);
            cur.pop_back();
        }
    };
    rec(lo);
}

}  // namespace

RatMatrix make_positive_Z(int n, int p, const std::vector<Rational>& nodes) {
    if (static_cast<int>(nodes.size()) != n) throw std::invalid_argument("expected " + std::to_string(n) + " nodes");
    if (p < 1 || p > n) throw std::invalid_argument("need 1 <= k+m <= n");
    for (int i = 1; i < n; ++i)
        if (!(nodes[i - 1] < nodes[i])) throw std::invalid_argument("nodes must be strictly increasing");
    RatMatrix z(n, p);
    for (int i = 0; i < n; ++i) {
        Rational x = 1;
        for (int j = 0; j < p; ++j) {
            z(i, j) = x;
            x *= nodes[i];
        }
    }
    if (!all_maximal_minors_positive(z)) throw std::logic_error("Vandermonde matrix with a non-positive maximal minor");
    return z;
}

bool all_maximal_minors_positive(const RatMatrix& z) {
    const int n = static_cast<int>(z.rows()), p = static_cast<int>(z.cols());
    if (p > n) return false;
    for (Subset s : k_subsets(n, p)) {
        auto rows = zero_based(elements(s));
        if (sgn(det(z.select_rows(rows))) <= 0) return false;
    }
    return true;
}

RatMatrix twisted_shift(const RatMatrix& z) {
    const std::size_t n = z.rows(), p = z.cols();
    RatMatrix out(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) out(i, j) = i + 1 < n ? z(i + 1, j) : ((p - 1) % 2 ? -z(0, j) : z(0, j));
    return out;
}

std::vector<Rational> z_row(const RatMatrix& z, int i) { return z.row(i - 1); }

std::vector<Rational> hat_row(const RatMatrix& z, int i) {
    auto r = z.row(i - 1);
    if ((z.cols() - 1) % 2)
        for (auto& x : r) x = -x;
    return r;
}

RatMatrix amp_map(const RatMatrix& c, const RatMatrix& z) {
    if (c.cols() != z.rows()) throw std::invalid_argument("C and Z do not compose");
    RatMatrix y = c * z;
    if (rank(y) != c.rows()) throw std::logic_error("amplituhedron map dropped rank");
    return y;
}

RatMatrix amp_map(const PluckerVector& p, const RatMatrix& z) { return amp_map(matrix_from_plucker(p), z); }

Rational twistor_of_rows(const RatMatrix& y, const std::vector<std::vector<Rational>>& rows) {
    if (y.rows() + rows.size() != y.cols()) throw std::invalid_argument("twistor needs k+m rows in total");
    RatMatrix m(y.cols(), y.cols());
    for (std::size_t r = 0; r < y.rows(); ++r)
        for (std::size_t c = 0; c < y.cols(); ++c) m(r, c) = y(r, c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != y.cols()) throw std::invalid_argument("row width mismatch");
        for (std::size_t c = 0; c < y.cols(); ++c) m(y.rows() + r, c) = rows[r][c];
    }
    return det(m);
}

Rational twistor(const RatMatrix& y, const RatMatrix& z, const std::vector<int>& indices) {
    check_shapes(y, z);
    if (static_cast<int>(indices.size()) != m_of(y, z)) throw std::invalid_argument("twistor needs exactly m indices");
    std::vector<std::vector<Rational>> rows;
    for (int i : indices) {
        if (i < 1 || i > static_cast<int>(z.rows())) throw std::invalid_argument("twistor index out of range");
        rows.push_back(z.row(i - 1));
    }
    return twistor_of_rows(y, rows);
}

Rational twistor_expand(const PluckerVector& c, const RatMatrix& z, const std::vector<int>& indices) {
    if (c.n() != static_cast<int>(z.rows())) throw std::invalid_argument("C and Z do not compose");
    if (c.k() + indices.size() != z.cols()) throw std::invalid_argument("twistor needs exactly m indices");
    Rational total = 0;
    for (std::size_t j = 0; j < c.subsets().size(); ++j) {
        if (sgn(c.coords()[j]) == 0) continue;
        auto rows = zero_based(elements(c.subsets()[j]));
        for (int i : indices) rows.push_back(i - 1);
        total += c.coords()[j] * det(z.select_rows(rows));
    }
    return total;
}

SignVector sign_stratum(const RatMatrix& y, const RatMatrix& z) {
    check_shapes(y, z);
    std::vector<Rational> tw;
    for (Subset s : k_subsets(static_cast<int>(z.rows()), m_of(y, z))) tw.push_back(twistor(y, z, elements(s)));
    auto sv = SignVector::projective_of(tw);
    if (std::all_of(sv.entries.begin(), sv.entries.end(), [](int s) { return s == 0; }))
        throw std::logic_error("all twistor coordinates vanish");
    return sv;
}

bool m1_membership(const RatMatrix& y, const RatMatrix& z) {
    if (m_of(y, z) != 1) throw std::invalid_argument("m1_membership needs m = 1");
    std::vector<Rational> tw;
    for (int i = 1; i <= static_cast<int>(z.rows()); ++i) tw.push_back(twistor(y, z, {i}));
    return varbar(tw) == static_cast<int>(y.rows());
}

bool m2_interior_test(const RatMatrix& y, const RatMatrix& z) {
    if (m_of(y, z) != 2) throw std::invalid_argument("m2_interior_test needs m = 2");
    const int n = static_cast<int>(z.rows());
    for (int i = 1; i < n; ++i)
        if (sgn(twistor(y, z, {i, i + 1})) <= 0) return false;
    if (sgn(twistor_of_rows(y, {z_row(z, n), hat_row(z, 1)})) <= 0) return false;
    std::vector<Rational> seq;
    for (int j = 2; j <= n; ++j) seq.push_back(twistor(y, z, {1, j}));
    return var(seq) == static_cast<int>(y.rows());
}

bool general_m_boundary_signs(const RatMatrix& y, const RatMatrix& z) {
    check_shapes(y, z);
    const int n = static_cast<int>(z.rows()), m = m_of(y, z), k = static_cast<int>(y.rows());
    const int r = m / 2;
    bool ok = true;
    auto positive = [&](const std::vector<std::vector<Rational>>& rows, int sign) {
        if (sgn(twistor_of_rows(y, rows)) * sign <= 0) ok = false;
    };
    auto rows_of = [&](const std::vector<int>& idx) {
        std::vector<std::vector<Rational>> rows;
        for (int i : idx) rows.push_back(z_row(z, i));
        return rows;
    };
    if (m % 2 == 0) {
        pair_sets(r, 1, n, [&](const std::vector<int>& idx) { positive(rows_of(idx), 1); });
        if (r >= 1)
            pair_sets(r - 1, 2, n - 1, [&](const std::vector<int>& idx) {
                auto rows = rows_of(idx);
                rows.push_back(z_row(z, n));
                rows.push_back(hat_row(z, 1));
                positive(rows, 1);
            });
    } else {
        int sign = k % 2 ? -1 : 1;
        pair_sets(r, 2, n, [&](const std::vector<int>& idx) {
            std::vector<int> all{1};
            all.insert(all.end(), idx.begin(), idx.end());
            positive(rows_of(all), sign);
        });
        pair_sets(r, 1, n - 1, [&](const std::vector<int>& idx) {
            auto all = idx;
            all.push_back(n);
            positive(rows_of(all), 1);
        });
    }
    if (!ok) return false;
    std::vector<Rational> seq;
    for (int j = m; j <= n; ++j) {
        std::vector<int> idx;
        for (int i = 1; i < m; ++i) idx.push_back(i);
        idx.push_back(j);
        seq.push_back(twistor(y, z, idx));
    }
    return var(seq) == k;
}

bool tile_membership_m2(const RatMatrix& y, const RatMatrix& z, const BicoloredTriangulation& t, bool strict) {
    if (m_of(y, z) != 2) throw std::invalid_argument("tile membership needs m = 2");
    if (t.n() != static_cast<int>(z.rows())) throw std::invalid_argument("triangulation and Z disagree on n");
    auto s = equivalence_class(t);
    for (Arc a : t.arcs()) {
        int sg = sgn(twistor(y, z, {a.h, a.j})) * (area(s, a) % 2 ? -1 : 1);
        if (sg < 0 || (strict && sg == 0)) return false;
    }
    return true;
}

std::string to_string(ChamberVerdict v) {
    switch (v) {
        case ChamberVerdict::inside: return "inside";
        case ChamberVerdict::outside: return "outside";
        case ChamberVerdict::boundary: return "boundary";
    }
    return "boundary";
}

ChamberVerdict w_chamber_membership(const RatMatrix& y, const RatMatrix& z, const WSimplex& ws) {
    if (m_of(y, z) != 2) throw std::invalid_argument("w-chambers need m = 2");
    const int n = static_cast<int>(z.rows());
    if (static_cast<int>(ws.w.size()) != n) throw std::invalid_argument("w-simplex and Z disagree on n");
    bool inside = true;
    for (int a = 1; a <= n; ++a) {
        std::vector<int> s(n + 1, 0);
        for (int j = 1; j <= n; ++j) {
            if (j == a) continue;
            Rational v = j < a ? twistor_of_rows(y, {z_row(z, a), hat_row(z, j)}) : twistor(y, z, {a, j});
            s[j] = sgn(v);
            if (s[j] == 0) return ChamberVerdict::boundary;
        }
        Subset flips = 0;
        for (int j = 1; j <= n; ++j) {
            int next = j == n ? 1 : j + 1;
            if (s[j] != 0 && s[next] != 0 && s[j] != s[next]) flips = with(flips, j);
        }
        if (flips != without(ws.vertices[a - 1], a)) inside = false;
    }
    return inside ? ChamberVerdict::inside : ChamberVerdict::outside;
}

std::vector<AmpSample> sample_amplituhedron(const PlabicGraph& g, const RatMatrix& z, int count, std::uint64_t seed) {
    auto cs = sample_cell(g, count, seed);
    std::vector<AmpSample> out(cs.size());
    const long total = static_cast<long>(cs.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
    for (long i = 0; i < total; ++i) out[i] = {cs[i], amp_map(cs[i], z)};
    return out;
}

AmpTilingReport verify_amp_tiling_m2(const std::vector<BicoloredTriangulation>& tiles, const RatMatrix& z, int samples,
                                     std::uint64_t seed) {
    AmpTilingReport rep;
    if (tiles.empty()) throw std::invalid_argument("empty tiling");
    rep.n = tiles.front().n();
    rep.k = tiles.front().black_count();
    for (const auto& t : tiles)
        if (t.n() != rep.n || t.black_count() != rep.k) throw std::invalid_argument("tiles of different types");
    if (static_cast<int>(z.rows()) != rep.n || static_cast<int>(z.cols()) != rep.k + 2)
        throw std::invalid_argument("Z must be n×(k+2)");
    std::vector<Matroid> ms;
    for (const auto& t : tiles) {
        auto g = dual_graph_of_triangulation(t);
        rep.dual_perms.push_back(trip_permutation(g));
        ms.push_back(positroid_of_graph(g));
    }
    rep.hypersimplex = verify_tiling(ms, rep.k + 1, rep.n);
    rep.valid = rep.hypersimplex.valid;
    rep.violations = rep.hypersimplex.violations;
    // interior samples from the top cell of Gr_{k,n}^{>0}
    auto top = top_cell_graph(rep.k, rep.n);
    rep.samples = samples;
    for (const auto& s : sample_amplituhedron(top, z, samples, seed)) {
        int closed = 0, open = 0;
        for (const auto& t : tiles) {
            open += tile_membership_m2(s.y, z, t, true);
            closed += tile_membership_m2(s.y, z, t, false);
        }
        auto witness = [&] {
            if (rep.witnesses.size() >= 5) return;
            std::vector<Rational> tw;
            for (Subset p : k_subsets(rep.n, 2)) tw.push_back(twistor(s.y, z, elements(p)));
            rep.witnesses.push_back(tw);
        };
        if (closed != open) {
            ++rep.boundary_samples;
            if (closed == 0) {
                ++rep.uncovered;
                witness();
            }
            continue;
        }
        if (open != 1) witness();
        if (open == 0) ++rep.uncovered;
        if (open > 1) ++rep.overlapping;
    }
    if (rep.uncovered) {
        rep.valid = false;
        rep.violations.push_back(std::to_string(rep.uncovered) + " sampled points lie in no tile");
    }
    if (rep.overlapping) {
        rep.valid = false;
        rep.violations.push_back(std::to_string(rep.overlapping) + " sampled points lie in several open tiles");
    }
    return rep;
}

BPointReport b_point(const RatMatrix& c, const RatMatrix& z) {
    BPointReport rep;
    auto y = amp_map(c, z);
    auto ker = kernel_basis(y);  // rows a with Y a = 0
    const int m = static_cast<int>(z.cols() - c.rows());
    rep.dim_x = static_cast<int>(ker.rows());
    if (rep.dim_x != m) return rep;
    RatMatrix x = (z * ker.transpose()).transpose();  // m×n, rows span X
    if (m == 0) {
        rep.ok = true;
        return rep;
    }
    auto px = plucker_of_matrix(x);
    rep.plucker_x = px.coords();
    for (Subset s : px.subsets()) rep.twistors.push_back(twistor(y, z, elements(s)));
    PluckerVector tw(m, static_cast<int>(z.rows()), rep.twistors);
    rep.ok = !tw.is_zero() && tw.projectively_equal(px);
    return rep;
}

std::vector<DecoratedPermutation> m1_segment_tiling(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    std::vector<DecoratedPermutation> out;
    for (int i = 1; i < n; ++i) {
        RatMatrix c(1, n);
        c(0, i - 1) = 1;
        c(0, i) = 1;
        out.push_back(decorated_permutation_of(c));
    }
    return out;
}

bool k1_open_cone_membership(const RatMatrix& y, const RatMatrix& z, Subset support) {
    if (y.rows() != 1) throw std::invalid_argument("cone membership needs k = 1");
    auto idx = zero_based(elements(support));
    if (idx.size() != z.cols()) throw std::invalid_argument("support must have k+m elements");
    auto coeff = solve(z.select_rows(idx).transpose(), y.row(0));
    int s0 = sgn(coeff.front());
    if (s0 == 0) return false;
    return std::all_of(coeff.begin(), coeff.end(), [&](const Rational& c) { return sgn(c) == s0; });
}

int image_dimension(const PlabicGraph& g, const RatMatrix& z, int trials, std::uint64_t seed, const std::vector<int>& zero_edges) {
    if (static_cast<int>(z.rows()) != g.n()) throw std::invalid_argument("graph and Z disagree on n");
    int best = 0;
    for (int t = 0; t < std::max(trials, 1); ++t) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
        auto w = random_weights(g, rng);
        auto jac = measurement_jacobian(g, w, zero_edges);
        // columns of jac are k-subsets of [n] in lex order
        const int kk = boundary_measurement(g, w).k();
        auto js = k_subsets(g.n(), kk);
        auto ss = k_subsets(static_cast<int>(z.cols()), kk);
        RatMatrix cb(js.size(), ss.size());
        for (std::size_t a = 0; a < js.size(); ++a)
            for (std::size_t b = 0; b < ss.size(); ++b) {
                auto rows = zero_based(elements(js[a]));
                auto colsel = zero_based(elements(ss[b]));
                cb(a, b) = det(z.select_rows(rows).select_columns(colsel));
            }
        auto prod = RatMatrix::from_rows(jac) * cb;
        best = std::max(best, static_cast<int>(rank(prod)) - 1);
    }
    return best;
}

}  // namespace positroid
