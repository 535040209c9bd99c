#include "approxconv/extreme_set.hpp"

#include "approxconv/simplex_lp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace approxconv {

namespace {

// Value of the (nonincreasing) tuple's functional at x, both in the given
// index order. On the ascending-coordinate domain this is the minimum of
// the functional over the tuple's whole permutation orbit (rearrangement
// inequality: largest coefficient on smallest coordinate).
Rational dot(const std::vector<int>& t, const std::vector<Rational>& x) {
    Rational v;
    for (size_t j = 0; j < t.size(); ++j) v += Rational(t[j]) * x[j];
    return v;
}

// Is there an interior x, constrained ascending, where candidate `t` ties
// the pointwise minimum over all candidates? Decided by maximizing the
// smallest coordinate subject to the domination inequalities. Constraint
// rows for competitors are added lazily; a full violation scan runs before
// any acceptance, so lazy rows never change the verdict.
bool attains_interior_min(const std::vector<int>& t, int base,
                          const std::vector<std::vector<int>>& candidates) {
    const int n1 = static_cast<int>(t.size());  // n+1 coordinates

    // When the tuple's weight is exactly 1 its own grid point
    // x(j) = B^(-m(j)) is interior and ascending; verifying domination
    // there by plain dot products usually settles the question without
    // touching the LP.
    if (ExponentTuple(t, base).kraft_weight() == Rational(1)) {
        std::vector<Rational> x;
        for (int m : t) x.push_back(Rational::inverse_power(base, static_cast<unsigned long>(m)));
        const Rational vt = dot(t, x);
        bool dominated = false;
        for (const auto& u : candidates)
            if (dot(u, x) < vt) {
                dominated = true;
                break;
            }
        if (!dominated) return true;
    }

    std::vector<size_t> active;
    std::vector<bool> in_active(candidates.size(), false);

    for (;;) {
        // variables: x(0..n), eps, one slack per inequality
        const int num_ineq = 1 + (n1 - 1) + static_cast<int>(active.size());
        const int vars = n1 + 1 + num_ineq;
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> b;
        auto row = [&]() -> std::vector<Rational>& {
            A.emplace_back(static_cast<size_t>(vars), Rational(0));
            return A.back();
        };
        {   // sum x = 1
            auto& r = row();
            for (int j = 0; j < n1; ++j) r[static_cast<size_t>(j)] = Rational(1);
            b.push_back(Rational(1));
        }
        int slack = n1 + 1;
        {   // x(0) - eps >= 0
            auto& r = row();
            r[0] = Rational(1);
            r[static_cast<size_t>(n1)] = Rational(-1);
            r[static_cast<size_t>(slack++)] = Rational(-1);
            b.push_back(Rational(0));
        }
        for (int j = 0; j + 1 < n1; ++j) {  // ascending coordinates
            auto& r = row();
            r[static_cast<size_t>(j + 1)] = Rational(1);
            r[static_cast<size_t>(j)] = Rational(-1);
            r[static_cast<size_t>(slack++)] = Rational(-1);
            b.push_back(Rational(0));
        }
        for (size_t ui : active) {  // sum (u_j - t_j) x_j >= 0
            auto& r = row();
            for (int j = 0; j < n1; ++j)
                r[static_cast<size_t>(j)] =
                    Rational(candidates[ui][static_cast<size_t>(j)] - t[static_cast<size_t>(j)]);
            r[static_cast<size_t>(slack++)] = Rational(-1);
            b.push_back(Rational(0));
        }
        std::vector<Rational> c(static_cast<size_t>(vars), Rational(0));
        c[static_cast<size_t>(n1)] = Rational(1);  // maximize eps

        const LpSolution sol = lp_maximize(A, b, c);
        if (sol.status != LpStatus::Optimal || sol.objective.sign() <= 0) return false;

        std::vector<Rational> x(sol.x.begin(), sol.x.begin() + n1);
        const Rational vt = dot(t, x);
        bool added = false;
        for (size_t ui = 0; ui < candidates.size(); ++ui) {
            if (in_active[ui] || candidates[ui] == t) continue;
            if (dot(candidates[ui], x) < vt) {
                active.push_back(ui);
                in_active[ui] = true;
                added = true;
            }
        }
        if (!added) return true;
    }
}

}  // namespace

std::vector<std::vector<int>> minimal_candidates(int n, int base) {
    if (n < 1) throw std::invalid_argument("minimal_candidates: n must be >= 1");
    if (base < 2) throw std::invalid_argument("minimal_candidates: base must be >= 2");

    std::vector<std::vector<int>> out;
    std::vector<int> tail;  // entries m(k+1..n), leftmost chosen last

    // choose m(k) right to left within [m(k+1), eta(k, C) - 1]
    auto rec = [&](auto&& self, int k, const Rational& budget) -> void {
        if (budget.sign() <= 0) return;
        const int lo = tail.empty() ? 1 : tail.back();
        const int hi = eta(k, budget, base) - 1;
        for (int m = lo; m <= hi; ++m) {
            tail.push_back(m);
            if (k == 0) {
                std::vector<int> tuple(tail.rbegin(), tail.rend());
                ExponentTuple t(tuple, base);
                if (t.is_feasible() && t.is_minimal()) out.push_back(std::move(tuple));
            } else {
                self(self, k - 1,
                     budget - Rational::inverse_power(base, static_cast<unsigned long>(m)));
            }
            tail.pop_back();
        }
    };
    rec(rec, n, Rational(1));

    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

ExtremeTupleSet enumerate_extreme(int n, int base) {
    const std::vector<std::vector<int>> candidates = minimal_candidates(n, base);
    ExtremeTupleSet set;
    set.n = n;
    set.base = base;
    for (const auto& t : candidates)
        if (attains_interior_min(t, base, candidates)) set.tuples.push_back(t);
    // candidates are already lex descending
    return set;
}

const ExtremeTupleSet& extreme_set_cached(int n, int base) {
    static std::map<std::pair<int, int>, ExtremeTupleSet> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, base});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(n, base), enumerate_extreme(n, base)).first;
    return it->second;
}

bool ExtremeTupleSet::contains(const std::vector<int>& t) const {
    return std::find(tuples.begin(), tuples.end(), t) != tuples.end();
}

nlohmann::ordered_json ExtremeTupleSet::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["B"] = base;
    j["tuples"] = tuples;
    return j;
}

}  // namespace approxconv
