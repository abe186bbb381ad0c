#pragma once

#include "positroid/matrix.hpp"

#include <vector>

namespace positroid {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    std::vector<Rational> primal;
    // Optimal dual y with c - yA >= 0; complementary to the final basis.
    std::vector<Rational> dual;
};

// minimize c.x subject to A x = b, x >= 0. Dense two-phase simplex with
// Bland's rule in exact arithmetic.
LpResult minimize(const RatMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

// Is x a convex combination of the given points (rows)?
bool in_convex_hull(const RatMatrix& points, const std::vector<Rational>& x);

}  // namespace positroid
