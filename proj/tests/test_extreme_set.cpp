#include "approxconv/extreme_set.hpp"

#include <doctest.h>

#include "brute_oracles.hpp"

#include <stdexcept>

using namespace approxconv;
using Tuples = std::vector<std::vector<int>>;

TEST_CASE("base 2 small sets, cross-checked against the box oracle") {
    CHECK(enumerate_extreme(1, 2).tuples == Tuples{{1, 1}});
    CHECK(enumerate_extreme(2, 2).tuples == Tuples{{2, 2, 1}});
    CHECK(enumerate_extreme(3, 2).tuples == Tuples{{3, 3, 2, 1}, {2, 2, 2, 2}});
    CHECK(enumerate_extreme(4, 2).tuples ==
          Tuples{{4, 4, 3, 2, 1}, {3, 3, 3, 3, 1}, {3, 3, 2, 2, 2}});
    CHECK(enumerate_extreme(5, 2).tuples == Tuples{{5, 5, 4, 3, 2, 1},
                                                   {4, 4, 4, 4, 2, 1},
                                                   {4, 4, 3, 3, 3, 1},
                                                   {4, 4, 3, 2, 2, 2},
                                                   {3, 3, 3, 3, 2, 2}});

    // at base 2 a positive tuple is minimal exactly when its weight is 1,
    // and each such tuple matches the envelope at its own dyadic point, so
    // the extreme set must coincide with the brute-force minimal set
    for (int n = 1; n <= 6; ++n) {
        const auto expected = brute::minimal_tuples(n + 1, 2, n + 3);
        CHECK(enumerate_extreme(n, 2).tuples == expected);
        for (const auto& t : expected)
            CHECK(brute::box_weight(t, 2) == Rational(1));
    }
}

TEST_CASE("base 3 sets, cross-checked against the box oracle plus the prune") {
    CHECK(enumerate_extreme(1, 3).tuples == Tuples{{1, 1}});
    CHECK(enumerate_extreme(2, 3).tuples == Tuples{{1, 1, 1}});
    CHECK(enumerate_extreme(3, 3).tuples == Tuples{{2, 2, 1, 1}});
    CHECK(enumerate_extreme(4, 3).tuples == Tuples{{2, 2, 2, 1, 1}});
    CHECK(enumerate_extreme(5, 3).tuples == Tuples{{3, 3, 2, 2, 1, 1}, {2, 2, 2, 2, 2, 1}});
    CHECK(enumerate_extreme(6, 3).tuples ==
          Tuples{{3, 3, 3, 2, 2, 1, 1}, {2, 2, 2, 2, 2, 2, 1}});
    // extreme tuples are always among the brute-force minimal ones
    for (int n = 1; n <= 6; ++n) {
        const auto minimal = brute::minimal_tuples(n + 1, 3, n + 3);
        for (const auto& t : enumerate_extreme(n, 3).tuples)
            CHECK(std::find(minimal.begin(), minimal.end(), t) != minimal.end());
    }
}

TEST_CASE("n below B forces the all-ones tuple") {
    for (int B = 2; B <= 7; ++B)
        for (int n = 1; n < B; ++n) {
            const auto set = enumerate_extreme(n, B);
            REQUIRE(set.tuples.size() == 1);
            CHECK(set.tuples[0] == std::vector<int>(static_cast<size_t>(n) + 1, 1));
        }
}

TEST_CASE("set sizes stay small out to n = 10") {
    const int expected_b2[] = {1, 1, 2, 3, 5, 9, 16, 28, 50, 89};
    for (int n = 1; n <= 10; ++n)
        CHECK(extreme_set_cached(n, 2).tuples.size() == static_cast<size_t>(expected_b2[n - 1]));
    CHECK(extreme_set_cached(10, 3).tuples.size() == 7);
}

TEST_CASE("every member is nonincreasing, feasible and minimal; order is lex descending") {
    for (int B : {2, 3, 4}) {
        for (int n = 1; n <= 5; ++n) {
            const auto set = enumerate_extreme(n, B);
            REQUIRE(!set.tuples.empty());
            for (size_t i = 0; i < set.tuples.size(); ++i) {
                const ExponentTuple t(set.tuples[i], B);
                CHECK(t.is_nonincreasing());
                CHECK(t.is_feasible());
                CHECK(t.is_minimal());
                if (i > 0) CHECK(set.tuples[i - 1] > set.tuples[i]);
            }
        }
    }
}

TEST_CASE("minimal candidates are a superset containing the extreme set") {
    for (int B : {2, 3}) {
        for (int n = 1; n <= 6; ++n) {
            const auto cands = minimal_candidates(n, B);
            const auto set = enumerate_extreme(n, B);
            for (const auto& t : set.tuples)
                CHECK(std::find(cands.begin(), cands.end(), t) != cands.end());
        }
    }
}

TEST_CASE("json shape") {
    const auto j = enumerate_extreme(3, 2).to_json();
    CHECK(j["n"] == 3);
    CHECK(j["B"] == 2);
    CHECK(j["tuples"].size() == 2);
    CHECK(j["tuples"][0] == nlohmann::ordered_json::array({3, 3, 2, 1}));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(enumerate_extreme(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_extreme(2, 1), std::invalid_argument);
}

TEST_CASE("cached access returns the same set") {
    const auto& a = extreme_set_cached(4, 2);
    const auto& b = extreme_set_cached(4, 2);
    CHECK(&a == &b);
    CHECK(a.tuples == enumerate_extreme(4, 2).tuples);
}
