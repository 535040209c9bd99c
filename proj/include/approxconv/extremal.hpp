#pragma once

#include "approxconv/exponent_tuple.hpp"
#include "approxconv/rational.hpp"
#include "approxconv/simplex_point.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace approxconv {

// An exponent tuple restricted to a support set, acting as the linear
// functional x -> sum_{j in support} coefficient(j) * x(j).
struct LinearPiece {
    std::vector<int> support;       // strictly increasing indices
    std::vector<int> coefficients;  // aligned with support
    int base = 2;

    Rational weight() const;  // sum B^(-m(j)) over the support
    bool feasible() const { return weight() <= Rational(1); }
    Rational value_at(const SimplexPoint& x) const;
    nlohmann::ordered_json to_json() const;
};

struct EvalResult {
    Rational value;
    LinearPiece witness;
    nlohmann::ordered_json to_json() const;
};

// E(x): exact minimum of sum m(j) x(j) over tuples on supp x whose weight
// fits 1. Singleton supports give 0 with exponent 0. Otherwise the minimum
// is taken over the extreme tuples of the support's face, each paired with
// the support coordinates sorted ascending (largest coefficient on the
// smallest coordinate realizes the orbit minimum).
EvalResult eval_E(const SimplexPoint& x, int base);

// Independent brute-force route: exhaustively minimizes over all tuples on
// supp x with entries in [0, bound], growing the bound while the chosen
// witness comes near it.
Rational eval_E_oracle(const SimplexPoint& x, int base, int bound = 4);

// min{1 + x + y, 2 - x, 2 - y} on the open 2-simplex, base 2.
Rational explicit_E_n2(const Rational& x, const Rational& y);

// -sum x(j) log_B x(j), with 0 log 0 = 0. The one floating-point surface.
double entropy_F(const SimplexPoint& x, int base);

// Closed-form maximum of E over the n-simplex, exact:
// floor(log_B n) + ceil(B(n+1-B^floor(log_B n))/(B-1)) / (n+1).
Rational kappa(int n, int base);

// The approximate-convexity certificate: given one feasible witness piece
// per combined point and the combination weights, returns the piece with
// exponents min_k m_k(j) + 1 on the union support. Feasible by
// construction; its value at the combination is at most 1 + sum t_k L_k.
LinearPiece combine_witnesses(const std::vector<LinearPiece>& witnesses,
                              const std::vector<Rational>& weights);

struct SurfaceRow {
    Rational x, y, value;
};

// E(x, y, 1-x-y) on the resolution-r grid of the 2-simplex; exact grid
// points so the boundary values (1 on open edges, 0 at vertices) are hit.
std::vector<SurfaceRow> surface_grid(int base, int resolution);

// CSV per the surface interface: header x,y,E,E_decimal; exact fractions
// plus a 6-place decimal for plotting.
std::string surface_grid_csv(int base, int resolution);

}  // namespace approxconv
