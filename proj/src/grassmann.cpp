#include "positroid/grassmann.hpp"

#include "positroid/parallel.hpp"
#include "positroid/random.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace positroid {

struct SubsetIndex {
    std::vector<Subset> subsets;
    std::unordered_map<Subset, std::size_t> position;
};

namespace {

std::shared_ptr<const SubsetIndex> index_for(int k, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const SubsetIndex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{k, n}];
    if (!slot) {
        auto idx = std::make_shared<SubsetIndex>();
        idx->subsets = k_subsets(n, k);
        for (std::size_t i = 0; i < idx->subsets.size(); ++i) idx->position[idx->subsets[i]] = i;
        slot = idx;
    }
    return slot;
}

std::vector<int> zero_based(Subset s) {
    auto e = elements(s);
    for (int& x : e) --x;
    return e;
}

Rational minor(const RatMatrix& c, Subset s) {
    auto cols = zero_based(s);
    return det(c.select_columns(cols));
}

void check_full_rank(const RatMatrix& c) {
    if (c.rows() > c.cols()) throw std::invalid_argument("matrix has more rows than columns");
    if (c.cols() > static_cast<std::size_t>(kMaxN)) throw std::invalid_argument("n too large");
    if (rank(c) != c.rows()) throw std::invalid_argument("matrix is not of full row rank");
}

}  // namespace

PluckerVector::PluckerVector(int k, int n) : k_(k), n_(n), index_(index_for(k, n)) {
    if (k < 0 || n < 0 || k > n || n > kMaxN) throw std::invalid_argument("invalid Grassmannian type");
    coords_.assign(index_->subsets.size(), Rational(0));
}

PluckerVector::PluckerVector(int k, int n, std::vector<Rational> coords) : PluckerVector(k, n) {
    if (coords.size() != coords_.size()) throw std::invalid_argument("Plücker vector length does not match C(n,k)");
    coords_ = std::move(coords);
}

const std::vector<Subset>& PluckerVector::subsets() const { return index_->subsets; }

std::size_t PluckerVector::index_of(Subset s) const {
    auto it = index_->position.find(s);
    if (it == index_->position.end()) throw std::out_of_range("subset " + subset_label(s) + " is not a coordinate");
    return it->second;
}

bool PluckerVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

PluckerVector PluckerVector::normalized() const {
    PluckerVector out = *this;
    for (const auto& q : coords_)
        if (sgn(q) != 0) {
            Rational f = q;
            for (auto& x : out.coords_) x /= f;
            break;
        }
    return out;
}

bool PluckerVector::projectively_equal(const PluckerVector& other) const {
    if (k_ != other.k_ || n_ != other.n_ || is_zero() || other.is_zero()) return false;
    return normalized().coords_ == other.normalized().coords_;
}

PluckerVector plucker_of_matrix_serial(const RatMatrix& c) {
    check_full_rank(c);
    PluckerVector p(static_cast<int>(c.rows()), static_cast<int>(c.cols()));
    std::vector<Rational> coords(p.coords().size());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = minor(c, p.subsets()[i]);
    return PluckerVector(p.k(), p.n(), std::move(coords));
}

PluckerVector plucker_of_matrix(const RatMatrix& c) {
    check_full_rank(c);
    PluckerVector p(static_cast<int>(c.rows()), static_cast<int>(c.cols()));
    const auto& subsets = p.subsets();
    std::vector<Rational> coords(subsets.size());
    const long count = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count()) if (count > 32)
    for (long i = 0; i < count; ++i) coords[i] = minor(c, subsets[i]);
    return PluckerVector(p.k(), p.n(), std::move(coords));
}

Matroid matroid_of(const PluckerVector& p) {
    Matroid m{p.k(), p.n(), {}};
    for (std::size_t i = 0; i < p.coords().size(); ++i)
        if (sgn(p.coords()[i]) != 0) m.bases.insert(p.subsets()[i]);
    return m;
}

namespace {

int first_sign(const PluckerVector& p) {
    for (const auto& q : p.coords())
        if (sgn(q) != 0) return sgn(q);
    return 0;
}

}  // namespace

bool is_tnn(const PluckerVector& p) {
    int s = first_sign(p);
    if (s == 0) return false;
    return std::all_of(p.coords().begin(), p.coords().end(), [s](const Rational& q) { return sgn(q) * s >= 0; });
}

bool is_tp(const PluckerVector& p) {
    int s = first_sign(p);
    if (s == 0) return false;
    return std::all_of(p.coords().begin(), p.coords().end(), [s](const Rational& q) { return sgn(q) * s > 0; });
}

RatMatrix matrix_from_plucker(const PluckerVector& p) {
    const int k = p.k(), n = p.n();
    std::size_t base = p.coords().size();
    for (std::size_t i = 0; i < p.coords().size(); ++i)
        if (sgn(p.coords()[i]) != 0) {
            base = i;
            break;
        }
    if (base == p.coords().size()) throw std::invalid_argument("zero Plücker vector");
    const Subset i0 = p.subsets()[base];
    const Rational& p0 = p.coords()[base];
    auto rows = elements(i0);
    RatMatrix a(k, n);
    for (int r = 0; r < k; ++r) {
        for (int j = 1; j <= n; ++j) {
            if (j == rows[r]) {
                a(r, j - 1) = 1;
                continue;
            }
            if (contains(i0, j)) continue;
            // Column j replaces the r-th basis column; sorting the resulting
            // index sequence contributes the sign of the permutation.
            Subset s = with(without(i0, rows[r]), j);
            int between = 0;
            for (int x : rows)
                if (x != rows[r] && ((x > rows[r] && x < j) || (x < rows[r] && x > j))) ++between;
            Rational v = p[s] / p0;
            a(r, j - 1) = between % 2 ? -v : v;
        }
    }
    return a;
}

bool satisfies_plucker_relations(const PluckerVector& p) {
    if (p.is_zero()) return false;
    return plucker_of_matrix(matrix_from_plucker(p)).projectively_equal(p);
}

bool satisfies_three_term_relations(const PluckerVector& p) {
    const int k = p.k(), n = p.n();
    if (k < 2 || n - k < 2) return true;
    for (Subset s : k_subsets(n, k - 2))
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d) {
                        if (contains(s, a) || contains(s, b) || contains(s, c) || contains(s, d)) continue;
                        auto P = [&](int x, int y) { return p[with(with(s, x), y)]; };
                        if (P(a, c) * P(b, d) != P(a, b) * P(c, d) + P(a, d) * P(b, c)) return false;
                    }
    return true;
}

DecoratedPermutation decorated_permutation_of(const RatMatrix& c) {
    auto p = plucker_of_matrix(c);
    if (!is_tnn(p)) throw std::invalid_argument("decorated_permutation_of requires a totally nonnegative point");
    const int n = static_cast<int>(c.cols());
    const std::size_t k = c.rows();
    std::vector<int> images(n), coloops;
    auto rank_of = [&](const std::vector<int>& cols) {
        if (cols.empty()) return std::size_t{0};
        return rank(c.select_columns(cols));
    };
    for (int i = 1; i <= n; ++i) {
        std::vector<int> self{i - 1};
        if (rank_of(self) == 0) {
            images[i - 1] = i;
            continue;
        }
        std::vector<int> others;
        for (int j = 1; j <= n; ++j)
            if (j != i) others.push_back(j - 1);
        if (rank_of(others) < k) {
            images[i - 1] = i;
            coloops.push_back(i);
            continue;
        }
        std::vector<int> span;
        for (int step = 1; step < n; ++step) {
            int j = (i - 1 + step) % n + 1;
            span.push_back(j - 1);
            auto with_i = span;
            with_i.push_back(i - 1);
            if (rank_of(with_i) == rank_of(span)) {
                images[i - 1] = j;
                break;
            }
        }
    }
    return DecoratedPermutation(std::move(images), coloops);
}

namespace {

// Vectors of the row space of b vanishing on a (rows-1)-subset of columns.
std::vector<std::vector<Rational>> cocircuit_candidates(const RatMatrix& b, std::size_t cap) {
    std::vector<std::vector<Rational>> out;
    const int d = static_cast<int>(b.rows()), n = static_cast<int>(b.cols());
    if (d == 0) return out;
    for (Subset j : k_subsets(n, d - 1)) {
        if (out.size() >= cap) break;
        auto cols = zero_based(j);
        RatMatrix bj = b.select_columns(cols).transpose();
        auto ker = d - 1 == 0 ? RatMatrix::identity(static_cast<std::size_t>(d)) : kernel_basis(bj);
        if (ker.rows() != 1) continue;
        auto v = ker.row(0) * b;
        out.push_back(std::move(v));
    }
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace

GkReport gk_test(const RatMatrix& c, GkMode mode, int trials, std::uint64_t seed) {
    check_full_rank(c);
    GkReport rep;
    rep.mode = mode;
    rep.trials = trials;
    rep.seed = seed;
    auto p = plucker_of_matrix(c);
    rep.exact_verdict = mode == GkMode::tnn ? is_tnn(p) : is_tp(p);
    const int k = static_cast<int>(c.rows());
    RatMatrix perp = kernel_basis(c);
    Rng rng(seed);

    auto row_fails = [&](const std::vector<Rational>& v) {
        return mode == GkMode::tnn ? var(v) > k - 1 : varbar(v) > k - 1;
    };
    auto perp_fails = [&](const std::vector<Rational>& w) {
        return mode == GkMode::tnn ? varbar(w) < k : var(w) < k;
    };
    auto sample = [&](const RatMatrix& basis) {
        std::vector<Rational> a(basis.rows());
        for (auto& x : a) x = rng.signed_weight();
        return a * basis;
    };

    std::vector<std::vector<Rational>> row_cands = cocircuit_candidates(c, 256);
    std::vector<std::vector<Rational>> perp_cands = cocircuit_candidates(perp, 256);
    for (int t = 0; t < trials; ++t) {
        row_cands.push_back(sample(c));
        if (perp.rows() > 0) perp_cands.push_back(sample(perp));
    }
    for (const auto& v : row_cands) {
        if (all_zero(v) || !row_fails(v)) continue;
        rep.row_space_ok = false;
        rep.row_witness = v;
        break;
    }
    for (const auto& w : perp_cands) {
        if (all_zero(w) || !perp_fails(w)) continue;
        rep.complement_ok = false;
        rep.complement_witness = w;
        break;
    }
    return rep;
}

}  // namespace positroid
