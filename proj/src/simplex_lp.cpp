#include "approxconv/simplex_lp.hpp"

#include <stdexcept>

namespace approxconv {

namespace {

struct Tableau {
    // rows x (cols + 1); last column is the rhs
    std::vector<std::vector<Rational>> t;
    std::vector<int> basis;
    int rows, cols;

    void pivot(int r, int c) {
        const Rational p = t[static_cast<size_t>(r)][static_cast<size_t>(c)];
        auto& prow = t[static_cast<size_t>(r)];
        for (auto& v : prow) v /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto& row = t[static_cast<size_t>(i)];
            const Rational f = row[static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = 0; j <= cols; ++j)
                row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        basis[static_cast<size_t>(r)] = c;
    }

    // Bland: enter at the smallest column with positive reduced cost, leave
    // by the exact ratio test with smallest-basis-index tie-breaking.
    // `cost` spans all columns; columns >= limit never enter.
    bool optimize(const std::vector<Rational>& cost, int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j) {
                Rational rc = cost[static_cast<size_t>(j)];
                for (int i = 0; i < rows; ++i) {
                    const Rational cb = cost[static_cast<size_t>(basis[static_cast<size_t>(i)])];
                    if (!cb.is_zero())
                        rc -= cb * t[static_cast<size_t>(i)][static_cast<size_t>(j)];
                }
                if (rc.sign() > 0) { enter = j; break; }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows; ++i) {
                const Rational& a = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (a.sign() <= 0) continue;
                Rational ratio = t[static_cast<size_t>(i)][static_cast<size_t>(cols)] / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best &&
                     basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution lp_maximize(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("lp_maximize: rhs size mismatch");

    Tableau tab;
    tab.rows = m;
    tab.cols = n + m;
    tab.t.assign(static_cast<size_t>(m),
                 std::vector<Rational>(static_cast<size_t>(tab.cols) + 1, Rational(0)));
    tab.basis.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(A[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("lp_maximize: row size mismatch");
        const bool flip = b[static_cast<size_t>(i)].sign() < 0;
        for (int j = 0; j < n; ++j) {
            const Rational& a = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            tab.t[static_cast<size_t>(i)][static_cast<size_t>(j)] = flip ? -a : a;
        }
        tab.t[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = Rational(1);
        tab.t[static_cast<size_t>(i)][static_cast<size_t>(tab.cols)] =
            flip ? -b[static_cast<size_t>(i)] : b[static_cast<size_t>(i)];
        tab.basis[static_cast<size_t>(i)] = n + i;
    }

    // phase 1: drive the artificial variables to zero
    std::vector<Rational> cost1(static_cast<size_t>(tab.cols), Rational(0));
    for (int j = n; j < tab.cols; ++j) cost1[static_cast<size_t>(j)] = Rational(-1);
    tab.optimize(cost1, tab.cols);
    Rational artificial_sum;
    for (int i = 0; i < m; ++i)
        if (tab.basis[static_cast<size_t>(i)] >= n)
            artificial_sum += tab.t[static_cast<size_t>(i)][static_cast<size_t>(tab.cols)];
    if (!artificial_sum.is_zero()) return {LpStatus::Infeasible, Rational(0), {}};

    // pivot surviving zero-level artificials out where possible; rows that
    // stay are redundant and inert (all-zero over the real columns)
    for (int i = 0; i < m; ++i) {
        if (tab.basis[static_cast<size_t>(i)] < n) continue;
        for (int j = 0; j < n; ++j) {
            if (!tab.t[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    // phase 2 over the real columns only
    std::vector<Rational> cost2(static_cast<size_t>(tab.cols), Rational(0));
    for (int j = 0; j < n; ++j) cost2[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    if (!tab.optimize(cost2, n)) return {LpStatus::Unbounded, Rational(0), {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x.assign(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[static_cast<size_t>(i)] < n)
            sol.x[static_cast<size_t>(tab.basis[static_cast<size_t>(i)])] =
                tab.t[static_cast<size_t>(i)][static_cast<size_t>(tab.cols)];
    for (int j = 0; j < n; ++j) sol.objective += c[static_cast<size_t>(j)] * sol.x[static_cast<size_t>(j)];
    return sol;
}

}  // namespace approxconv
