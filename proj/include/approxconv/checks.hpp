#pragma once

#include "approxconv/rational.hpp"
#include "approxconv/simplex_point.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace approxconv {

// Deterministic 64-bit stream; fixed constants so reports are reproducible
// across platforms and standard libraries.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

// Seed-derived substream for one trial of one suite; trials are independent
// and may be evaluated in any order with identical results.
SplitMix64 trial_stream(uint64_t seed, uint64_t suite_salt, uint64_t trial);

// Uniform rational grid point of Delta_n with the given support size:
// support chosen uniformly, denominator uniform in [support_size, max_den],
// then a uniform composition into positive parts.
SimplexPoint sample_grid_point(SplitMix64& rng, int n, int support_size, int max_den = 64);

// A deterministic pointwise evaluator on the simplex; exact evaluators
// compare exactly, floating ones within `float_tolerance`.
struct Evaluator {
    enum class Mode { Exact, Floating };
    Mode mode = Mode::Exact;
    std::string name;
    std::function<Rational(const SimplexPoint&)> exact;
    std::function<double(const SimplexPoint&)> floating;

    static Evaluator exact_fn(std::string name, std::function<Rational(const SimplexPoint&)> f);
    static Evaluator float_fn(std::string name, std::function<double(const SimplexPoint&)> f);

    double value_as_double(const SimplexPoint& x) const;
};

inline constexpr double float_tolerance = 1e-9;

struct TrialReport {
    std::string suite;
    int n = 0;
    int base = 0;
    long trials = 0;
    long violations = 0;
    uint64_t seed = 0;
    bool exact_mode = true;
    bool have_slack = false;
    Rational worst_slack_exact;         // signed margin of the tightest trial
    double worst_slack_float = 0.0;
    std::vector<std::string> assumptions;
    std::vector<nlohmann::ordered_json> counterexamples;  // at most 10 kept

    bool passed() const { return violations == 0; }
    nlohmann::ordered_json to_json() const;
};

// f(sum t_i x_i) <= sum t_i f(x_i) + 1 over sampled B-point combinations.
TrialReport check_approx_convex(const Evaluator& f, int n, int base, long trials, uint64_t seed);

// f(l x + (1-l) y) >= l f(x) + (1-l) f(y) over sampled pairs and weights.
TrialReport check_concave(const Evaluator& f, int n, long trials, uint64_t seed);

// h(x) <= E(x) over sampled points; requires h(e(j)) <= 0 at every vertex
// and records the caller's approximate-convexity assumption.
TrialReport check_dominance(const Evaluator& h, int n, int base, long trials, uint64_t seed);

// F(x) <= E(x) <= F(x) + 1 with the float tolerance on the entropy side.
TrialReport check_sandwich(int n, int base, long trials, uint64_t seed);

}  // namespace approxconv
