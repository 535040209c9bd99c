#pragma once

#include "approxconv/exponent_tuple.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace approxconv {

// The nonincreasing exponent tuples whose linear functional attains the
// lower envelope E somewhere in the open simplex. The full set of such
// tuples is the orbit of this one under coordinate permutations.
struct ExtremeTupleSet {
    int n = 0;
    int base = 2;
    std::vector<std::vector<int>> tuples;  // each nonincreasing; lex descending order

    bool contains(const std::vector<int>& t) const;
    nlohmann::ordered_json to_json() const;
};

// Candidate generation only: nonincreasing positive tuples built right to
// left within the eta bounds, kept when feasible and minimal for budget 1.
// Superset of the extreme set; exposed for tests and for the prune.
std::vector<std::vector<int>> minimal_candidates(int n, int base);

// Full enumeration: candidates, then an exact-LP prune keeping a tuple iff
// some interior point exists where it matches the pointwise minimum over
// the whole candidate orbit.
ExtremeTupleSet enumerate_extreme(int n, int base);

// Memoized access for evaluators; observably identical to recomputation.
const ExtremeTupleSet& extreme_set_cached(int n, int base);

}  // namespace approxconv
