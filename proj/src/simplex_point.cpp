#include "approxconv/simplex_point.hpp"

#include <stdexcept>

namespace approxconv {

SimplexPoint::SimplexPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("SimplexPoint: empty coordinate vector");
    Rational sum;
    for (const auto& c : coords_) {
        if (c.sign() < 0) throw std::invalid_argument("SimplexPoint: negative coordinate");
        sum += c;
    }
    if (sum != Rational(1))
        throw std::invalid_argument("SimplexPoint: coordinates sum to " + sum.str() + ", not 1");
}

std::vector<int> SimplexPoint::support() const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (!coords_[static_cast<size_t>(j)].is_zero()) out.push_back(j);
    return out;
}

SimplexPoint vertex(int n, int j) {
    if (n < 0) throw std::invalid_argument("vertex: negative dimension");
    if (j < 0 || j > n) throw std::invalid_argument("vertex: index out of range");
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[static_cast<size_t>(j)] = Rational(1);
    return SimplexPoint(std::move(c));
}

SimplexPoint barycenter(int n) {
    if (n < 0) throw std::invalid_argument("barycenter: negative dimension");
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(1, n + 1));
    return SimplexPoint(std::move(c));
}

SimplexPoint convex_combination(const std::vector<SimplexPoint>& points,
                                const std::vector<Rational>& weights) {
    if (points.empty() || points.size() != weights.size())
        throw std::invalid_argument("convex_combination: points/weights size mismatch");
    const int n = points.front().dimension();
    Rational wsum;
    for (const auto& w : weights) {
        if (w.sign() < 0) throw std::invalid_argument("convex_combination: negative weight");
        wsum += w;
    }
    if (wsum != Rational(1))
        throw std::invalid_argument("convex_combination: weights sum to " + wsum.str());
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].dimension() != n)
            throw std::invalid_argument("convex_combination: dimension mismatch");
        for (int j = 0; j <= n; ++j)
            c[static_cast<size_t>(j)] += weights[i] * points[i].coord(j);
    }
    return SimplexPoint(std::move(c));
}

}  // namespace approxconv
