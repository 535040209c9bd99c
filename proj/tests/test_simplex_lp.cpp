#include "approxconv/simplex_lp.hpp"

#include <doctest.h>

using namespace approxconv;
using Matrix = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

TEST_CASE("simple bounded maximum") {
    // max x0 + x1 st x0 + 2 x1 + s = 4, 3 x0 + x1 + s2 = 6
    Matrix A = {{Rational(1), Rational(2), Rational(1), Rational(0)},
                {Rational(3), Rational(1), Rational(0), Rational(1)}};
    Vec b = {Rational(4), Rational(6)};
    Vec c = {Rational(1), Rational(1), Rational(0), Rational(0)};
    auto sol = lp_maximize(A, b, c);
    REQUIRE(sol.status == LpStatus::Optimal);
    // vertex at x0 = 8/5, x1 = 6/5
    CHECK(sol.objective == Rational(14, 5));
    CHECK(sol.x[0] == Rational(8, 5));
    CHECK(sol.x[1] == Rational(6, 5));
}

TEST_CASE("infeasible system is reported") {
    // x0 = 1 and x0 = 2 simultaneously
    Matrix A = {{Rational(1)}, {Rational(1)}};
    Vec b = {Rational(1), Rational(2)};
    Vec c = {Rational(0)};
    CHECK(lp_maximize(A, b, c).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective is reported") {
    // max x0 st x0 - x1 = 0
    Matrix A = {{Rational(1), Rational(-1)}};
    Vec b = {Rational(0)};
    Vec c = {Rational(1), Rational(0)};
    CHECK(lp_maximize(A, b, c).status == LpStatus::Unbounded);
}

TEST_CASE("negative rhs rows are handled") {
    // -x0 = -3  =>  x0 = 3
    Matrix A = {{Rational(-1)}};
    Vec b = {Rational(-3)};
    Vec c = {Rational(-1)};
    auto sol = lp_maximize(A, b, c);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x[0] == Rational(3));
    CHECK(sol.objective == Rational(-3));
}

TEST_CASE("redundant rows do not break phase two") {
    // x0 + x1 = 1 stated twice
    Matrix A = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    Vec b = {Rational(1), Rational(1)};
    Vec c = {Rational(2), Rational(1)};
    auto sol = lp_maximize(A, b, c);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rational(2));
    CHECK(sol.x[0] == Rational(1));
}

TEST_CASE("degenerate barycentric pricing stays exact") {
    // min y over combinations of (0,0), (1,0), (1/2,1): envelope below (1/2, ...)
    // variables t0,t1,t2; rows: t0*0 + t1*1 + t2*(1/2) = 1/2 ; sum t = 1
    Matrix A = {{Rational(0), Rational(1), Rational(1, 2)},
                {Rational(1), Rational(1), Rational(1)}};
    Vec b = {Rational(1, 2), Rational(1)};
    // values y = (0, 0, 1); maximize -sum y t
    Vec c = {Rational(0), Rational(0), Rational(-1)};
    auto sol = lp_maximize(A, b, c);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == Rational(0));  // midpoint of the flat edge
    CHECK(sol.x[0] == Rational(1, 2));
    CHECK(sol.x[1] == Rational(1, 2));
}
