#include "positroid/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace positroid {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> data;
    data.reserve(rows.size() * c);
    for (const auto& r : rows) {
        if (r.size() != c) throw std::invalid_argument("ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return RatMatrix(rows.size(), c, std::move(data));
}

std::vector<Rational> RatMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> RatMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RatMatrix RatMatrix::select_columns(std::span<const int> cols) const {
    RatMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, static_cast<std::size_t>(cols[j]));
    return out;
}

RatMatrix RatMatrix::select_rows(std::span<const int> rows) const {
    RatMatrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(static_cast<std::size_t>(rows[i]), c);
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

RatMatrix RatMatrix::stack_below(const RatMatrix& other) const {
    if (rows_ && other.rows_ && cols_ != other.cols_) throw std::invalid_argument("stack: column mismatch");
    std::size_t c = rows_ ? cols_ : other.cols_;
    std::vector<Rational> data = data_;
    data.insert(data.end(), other.data_.begin(), other.data_.end());
    return RatMatrix(rows_ + other.rows_, c, std::move(data));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (sgn(a(i, l)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
        }
    return out;
}

std::vector<Rational> operator*(const std::vector<Rational>& row, const RatMatrix& m) {
    if (row.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
    std::vector<Rational> out(m.cols());
    for (std::size_t l = 0; l < m.rows(); ++l) {
        if (sgn(row[l]) == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[l] * m(l, j);
    }
    return out;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Clear denominators row by row, then run Bareiss on integers.
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
        for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Rational d(a[n * n - 1] * sign, scale);
    d.canonicalize();
    return d;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
    RatMatrix a = m;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || sgn(a(r, c)) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
        }
        if (pivots) pivots->push_back(c);
        ++row;
    }
    return a;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

RatMatrix kernel_basis(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    RatMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return RatMatrix(0, m.cols());
    return RatMatrix::from_rows(basis);
}

RatMatrix row_space_basis(const RatMatrix& m) {
    std::vector<std::size_t> piv;
    RatMatrix r = rref(m, &piv);
    std::vector<int> keep;
    for (std::size_t i = 0; i < piv.size(); ++i) keep.push_back(static_cast<int>(i));
    return r.select_rows(keep);
}

std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& b) {
    if (m.rows() != m.cols() || b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    std::vector<std::size_t> piv;
    RatMatrix red = rref(aug, &piv);
    if (piv.size() != m.rows() || piv.back() != m.cols() - 1) throw std::domain_error("solve: singular system");
    std::vector<Rational> x(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) x[r] = red(r, m.cols());
    return x;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    std::vector<std::size_t> piv;
    RatMatrix red = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    RatMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = red(r, n + c);
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace positroid
