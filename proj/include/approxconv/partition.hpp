#pragma once

#include "approxconv/exponent_tuple.hpp"

#include <vector>

namespace approxconv {

// Splits {0,...,n} into B disjoint (possibly empty) index sets, each with
// weight sum <= 1/B. Requires every entry >= 1 and total weight <= 1.
// Indices are placed by nonincreasing weight into the first bin that fits;
// the exact bound on every bin is verified before returning.
std::vector<std::vector<int>> partition_tuple(const ExponentTuple& t);

}  // namespace approxconv
