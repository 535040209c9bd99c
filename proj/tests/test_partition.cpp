#include "approxconv/partition.hpp"

#include "approxconv/extreme_set.hpp"

#include <doctest.h>

#include "test_rng.hpp"

#include <algorithm>
#include <stdexcept>

using namespace approxconv;

namespace {

void check_valid_partition(const ExponentTuple& t, const std::vector<std::vector<int>>& bins) {
    REQUIRE(bins.size() == static_cast<size_t>(t.base()));
    const Rational cap(1, t.base());
    std::vector<int> seen;
    for (const auto& bin : bins) {
        Rational load;
        for (int j : bin) {
            load += Rational::inverse_power(
                t.base(), static_cast<unsigned long>(t.entries()[static_cast<size_t>(j)]));
            seen.push_back(j);
        }
        CHECK(load <= cap);
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(t.entries().size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    CHECK(seen == all);
}

}  // namespace

TEST_CASE("forced two-bin split") {
    const auto bins = partition_tuple(ExponentTuple({1, 1}, 2));
    check_valid_partition(ExponentTuple({1, 1}, 2), bins);
    CHECK(bins[0] == std::vector<int>{0});
    CHECK(bins[1] == std::vector<int>{1});
}

TEST_CASE("documented splits for the small extreme tuples") {
    // (2,2,1): the weight-1/2 index goes alone, the two quarters pair up
    const auto bins = partition_tuple(ExponentTuple({2, 2, 1}, 2));
    CHECK(bins[0] == std::vector<int>{2});
    CHECK(bins[1] == std::vector<int>{0, 1});

    const auto bins2 = partition_tuple(ExponentTuple({2, 2, 2, 2}, 2));
    CHECK(bins2[0].size() == 2);
    CHECK(bins2[1].size() == 2);
    check_valid_partition(ExponentTuple({2, 2, 2, 2}, 2), bins2);
}

TEST_CASE("every extreme tuple partitions, for both bases") {
    for (int B : {2, 3})
        for (int n = 1; n <= 5; ++n)
            for (const auto& e : extreme_set_cached(n, B).tuples) {
                const ExponentTuple t(e, B);
                check_valid_partition(t, partition_tuple(t));
            }
}

TEST_CASE("random feasible tuples partition") {
    SplitMix64 rng(99);
    int done = 0;
    while (done < 500) {
        const int B = 2 + static_cast<int>(rng.below(2));
        const int len = 2 + static_cast<int>(rng.below(6));
        std::vector<int> e;
        for (int i = 0; i < len; ++i) e.push_back(1 + static_cast<int>(rng.below(7)));
        const ExponentTuple t(e, B);
        if (!t.is_feasible()) continue;
        check_valid_partition(t, partition_tuple(t));
        ++done;
    }
}

TEST_CASE("preconditions are enforced") {
    CHECK_THROWS_AS(partition_tuple(ExponentTuple({0, 1}, 2)), std::invalid_argument);
    CHECK_THROWS_AS(partition_tuple(ExponentTuple({1, 1, 1}, 2)), std::invalid_argument);
}

TEST_CASE("empty bins are allowed when the tuple is light") {
    // weight 2/9 <= 1, three bins, most stay empty
    const auto bins = partition_tuple(ExponentTuple({2, 2}, 3));
    check_valid_partition(ExponentTuple({2, 2}, 3), bins);
}
