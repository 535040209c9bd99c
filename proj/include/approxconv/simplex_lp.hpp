#pragma once

#include "approxconv/rational.hpp"

#include <vector>

namespace approxconv {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;
};

// Exact solver for: maximize c.x subject to A x = b, x >= 0.
// Small dense two-phase simplex over rationals with Bland's rule, so it
// terminates on degenerate instances and every comparison is exact.
LpSolution lp_maximize(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c);

}  // namespace approxconv
