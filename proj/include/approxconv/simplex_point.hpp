#pragma once

#include "approxconv/rational.hpp"

#include <vector>

namespace approxconv {

// A point of the standard n-simplex in barycentric form: n+1 nonnegative
// exact coordinates summing to exactly 1. Construction validates both
// constraints, so a SimplexPoint is valid by construction everywhere else.
class SimplexPoint {
public:
    explicit SimplexPoint(std::vector<Rational> coords);

    int dimension() const { return static_cast<int>(coords_.size()) - 1; }
    int size() const { return static_cast<int>(coords_.size()); }
    const Rational& coord(int j) const { return coords_.at(static_cast<size_t>(j)); }
    const std::vector<Rational>& coords() const { return coords_; }

    // Indices of the nonzero coordinates; never empty.
    std::vector<int> support() const;

    friend bool operator==(const SimplexPoint& a, const SimplexPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const SimplexPoint& a, const SimplexPoint& b) { return !(a == b); }

private:
    std::vector<Rational> coords_;
};

// e(j) in Delta_n: coordinate j is 1, all others 0.
SimplexPoint vertex(int n, int j);

// The uniform point (1/(n+1), ..., 1/(n+1)).
SimplexPoint barycenter(int n);

// Exact coordinatewise combination sum_i weights[i] * points[i]. The weights
// must themselves form a simplex point and all points must share a dimension.
SimplexPoint convex_combination(const std::vector<SimplexPoint>& points,
                                const std::vector<Rational>& weights);

}  // namespace approxconv
