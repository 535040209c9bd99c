#include "approxconv/simplex_point.hpp"

#include <doctest.h>

#include "test_rng.hpp"

#include <stdexcept>

using namespace approxconv;

TEST_CASE("vertices") {
    CHECK(vertex(2, 0) == SimplexPoint({Rational(1), Rational(0), Rational(0)}));
    CHECK(vertex(1, 1) == SimplexPoint({Rational(0), Rational(1)}));
    CHECK_THROWS_AS(vertex(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(vertex(2, -1), std::invalid_argument);
}

TEST_CASE("barycenter") {
    CHECK(barycenter(1) == SimplexPoint({Rational(1, 2), Rational(1, 2)}));
    CHECK(barycenter(2) == SimplexPoint({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK(barycenter(4).coord(3) == Rational(1, 5));
    CHECK(barycenter(0) == SimplexPoint({Rational(1)}));
}

TEST_CASE("construction rejects invalid coordinate vectors") {
    CHECK_THROWS_AS(SimplexPoint({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(SimplexPoint({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(SimplexPoint(std::vector<Rational>{}), std::invalid_argument);
    // off by one part in a trillion still rejected
    CHECK_THROWS_AS(SimplexPoint({Rational(1, 2), Rational(500000000001L, 1000000000000L)}),
                    std::invalid_argument);
}

TEST_CASE("support") {
    CHECK(vertex(3, 2).support() == std::vector<int>{2});
    CHECK(barycenter(2).support() == std::vector<int>{0, 1, 2});
    SimplexPoint p({Rational(1, 2), Rational(0), Rational(1, 2)});
    CHECK(p.support() == std::vector<int>{0, 2});
}

TEST_CASE("convex combinations") {
    const SimplexPoint e0 = vertex(1, 0), e1 = vertex(1, 1);
    CHECK(convex_combination({e0, e1}, {Rational(1, 2), Rational(1, 2)}) ==
          SimplexPoint({Rational(1, 2), Rational(1, 2)}));
    CHECK(convex_combination({vertex(2, 0)}, {Rational(1)}) == vertex(2, 0));
    CHECK(convex_combination({e0, e1}, {Rational(1, 3), Rational(2, 3)}) ==
          SimplexPoint({Rational(1, 3), Rational(2, 3)}));

    CHECK_THROWS_AS(convex_combination({e0, vertex(2, 0)}, {Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(convex_combination({e0, e1}, {Rational(1, 2), Rational(1, 3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(convex_combination({e0, e1}, {Rational(3, 2), Rational(-1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("full weight on one point returns that point exactly") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const SimplexPoint p = sample_grid_point(rng, n, 1 + static_cast<int>(rng.below(n + 1)));
        const SimplexPoint q = sample_grid_point(rng, n, 1 + static_cast<int>(rng.below(n + 1)));
        CHECK(convex_combination({p, q}, {Rational(1), Rational(0)}) == p);
    }
}
