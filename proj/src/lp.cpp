#include "positroid/lp.hpp"

#include <stdexcept>

namespace positroid {

namespace {

using Row = std::vector<Rational>;

struct Tableau {
    std::vector<Row> rows;  // last entry of each row is the right-hand side
    std::vector<std::size_t> basis;
    std::size_t width = 0;  // number of variable columns

    void pivot(std::size_t r, std::size_t col) {
        Rational inv = 1 / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = 0; j <= width; ++j)
                if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
        }
        basis[r] = col;
    }

    // Returns false when unbounded. Columns >= allowed are never entered.
    bool run(const Row& cost, std::size_t allowed) {
        while (true) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                Rational d = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (sgn(rows[i][j]) != 0) d -= cost[basis[i]] * rows[i][j];
                if (sgn(d) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed) return true;
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (sgn(rows[i][enter]) <= 0) continue;
                Rational ratio = rows[i][width] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult minimize(const RatMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n) throw std::invalid_argument("LP shape mismatch");
    Tableau t;
    t.width = n + m;
    t.rows.assign(m, Row(n + m + 1));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        int s = sgn(b[i]) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = s * a(i, j);
        t.rows[i][n + i] = 1;
        t.rows[i][n + m] = s * b[i];
        t.basis[i] = n + i;
    }
    Row phase1(n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
    t.run(phase1, n + m);
    LpResult res;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= n && sgn(t.rows[i][n + m]) != 0) return res;  // infeasible

    std::vector<std::size_t> kept;  // original row index per tableau row
    std::vector<Row> rows;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= n) {
            std::size_t j = 0;
            while (j < n && sgn(t.rows[i][j]) == 0) ++j;
            if (j == n) continue;  // redundant constraint
            t.pivot(i, j);
        }
    }
    // Row i of the tableau descends from original row i (pivots never swap rows).
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= n) continue;
        kept.push_back(i);
        rows.push_back(t.rows[i]);
        basis.push_back(t.basis[i]);
    }
    t.rows = std::move(rows);
    t.basis = std::move(basis);

    Row phase2(n + m);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!t.run(phase2, n)) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.primal.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) res.primal[t.basis[i]] = t.rows[i][n + m];
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.primal[j];

    const std::size_t r = kept.size();
    RatMatrix bt(r, r);
    std::vector<Rational> cb(r);
    for (std::size_t i = 0; i < r; ++i) {
        cb[i] = c[t.basis[i]];
        for (std::size_t l = 0; l < r; ++l) bt(i, l) = a(kept[l], t.basis[i]);
    }
    res.dual.assign(m, Rational(0));
    if (r > 0) {
        auto y = solve(bt, cb);
        for (std::size_t l = 0; l < r; ++l) res.dual[kept[l]] = y[l];
    }
    return res;
}

bool in_convex_hull(const RatMatrix& points, const std::vector<Rational>& x) {
    const std::size_t d = points.cols(), count = points.rows();
    if (x.size() != d) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    if (count == 0) return false;
    RatMatrix a(d + 1, count);
    std::vector<Rational> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t p = 0; p < count; ++p) a(i, p) = points(p, i);
        b[i] = x[i];
    }
    for (std::size_t p = 0; p < count; ++p) a(d, p) = 1;
    b[d] = 1;
    return minimize(a, b, std::vector<Rational>(count)).status == LpStatus::optimal;
}

}  // namespace positroid
