#pragma once

#include "approxconv/rational.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace approxconv {

// A finite sample of a function on a convex subset of R^n: rational points
// with rational values, together with the slack scale epsilon and the
// combination arity base. The greatest convex minorant of the sampled
// epigraph is computed pointwise by an exact LP over these points.
struct SampleSet {
    int n = 1;
    int base = 2;
    Rational epsilon{1};
    std::vector<std::vector<Rational>> xs;
    std::vector<Rational> ys;

    void validate() const;
    static SampleSet from_json(const nlohmann::ordered_json& j);
    nlohmann::ordered_json to_json() const;
};

struct EnvelopeQuery {
    bool feasible = false;  // false: the query lies outside the sample hull
    Rational g_value;
    std::vector<Rational> weights;  // barycentric over samples; <= n+1 nonzero
};

// g(x) = min sum t_i y_i over t >= 0, sum t_i = 1, sum t_i x_i = x.
// The optimal vertex has at most n+1 nonzero weights.
EnvelopeQuery envelope_at(const SampleSet& s, const std::vector<Rational>& x);

struct DecompositionReport {
    bool pass = false;
    size_t points = 0;
    Rational bound;    // kappa(n, B) * epsilon
    Rational max_gap;  // max over samples of f - g
    std::vector<std::vector<Rational>> max_gap_points;
    std::vector<std::string> failures;
    nlohmann::ordered_json to_json() const;
};

// At every sample point: g <= f and f <= g + kappa(n,B) epsilon, exactly;
// equivalently |f - g0| <= kappa(n,B) epsilon / 2 for g0 = g + bound/2.
DecompositionReport verify_decomposition(const SampleSet& s);

struct BestConstantReport {
    DecompositionReport decomposition;
    Rational kappa_value;
    bool gap_attains_kappa = false;  // max gap equals kappa(n,B) at the barycenter
    nlohmann::ordered_json to_json() const;
};

// Samples the extremal function on the denominator-d grid of the simplex
// (embedded in R^n by dropping the last coordinate) and verifies that the
// decomposition gap attains kappa(n,B) exactly. Requires (n+1) | d.
BestConstantReport best_constant_witness(int n, int base, int grid_denominator);

}  // namespace approxconv
