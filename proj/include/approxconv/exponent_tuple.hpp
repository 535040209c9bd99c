#pragma once

#include "approxconv/rational.hpp"

#include <vector>

namespace approxconv {

// An (n+1)-tuple of nonnegative integer exponents (m(0),...,m(n)) over a
// base B >= 2, weighted by sum_j B^(-m(j)). The weight plays the same role
// as Kraft's inequality does for B-ary prefix code lengths: a tuple is
// usable iff its weight fits a budget (1, or a residual in the recursion).
class ExponentTuple {
public:
    ExponentTuple(std::vector<int> entries, int base);

    const std::vector<int>& entries() const { return entries_; }
    int base() const { return base_; }
    int size() const { return static_cast<int>(entries_.size()); }

    // sum_j B^(-m(j)), exact.
    Rational kraft_weight() const;

    bool is_feasible(const Rational& budget = Rational(1)) const;

    // No componentwise-smaller tuple fits the budget. Single decrements
    // suffice: the weight strictly grows when any entry shrinks, so any
    // smaller tuple weighs at least as much as some one-step decrement.
    bool is_minimal(const Rational& budget = Rational(1)) const;

    bool is_nonincreasing() const;
    ExponentTuple sorted_desc() const;

    friend bool operator==(const ExponentTuple& a, const ExponentTuple& b) {
        return a.base_ == b.base_ && a.entries_ == b.entries_;
    }

private:
    std::vector<int> entries_;
    int base_;
};

// Smallest integer j >= 2 with C * B^j >= n + B, by exact comparison.
// Bounds the last entry of any tuple that is extreme for (n, C).
int eta(int n, const Rational& budget, int base);

}  // namespace approxconv
