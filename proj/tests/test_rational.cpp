#include "approxconv/rational.hpp"

#include <doctest.h>

#include "test_rng.hpp"

#include <stdexcept>

using approxconv::Rational;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(5, 3) == Rational(10, 6));
}

TEST_CASE("construction and division reject zero denominators") {
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("parse accepts p/q, integers, and signs") {
    CHECK(Rational::parse("5/3") == Rational(5, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("+2/4") == Rational(1, 2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("round trip through str") {
    for (long n = -12; n <= 12; ++n)
        for (long d = 1; d <= 9; ++d) {
            Rational r(n, d);
            CHECK(Rational::parse(r.str()) == r);
        }
}

TEST_CASE("exact field laws on random rationals") {
    approxconv::SplitMix64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        auto draw = [&]() {
            long num = static_cast<long>(rng.below(2001)) - 1000;
            long den = 1 + static_cast<long>(rng.below(999));
            return Rational(num, den);
        };
        const Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rational(0));
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

TEST_CASE("powers are exact at large exponents") {
    CHECK(Rational::power(2, 10) == Rational(1024));
    CHECK(Rational::inverse_power(2, 3) == Rational(1, 8));
    // far beyond any machine-word range
    const Rational big = Rational::power(3, 100);
    CHECK(big * Rational::inverse_power(3, 100) == Rational(1));
    CHECK(Rational::inverse_power(2, 200) * Rational::power(2, 199) == Rational(1, 2));
}

TEST_CASE("decimal rendering rounds halves away from zero") {
    CHECK(Rational(5, 3).decimal(4) == "1.6667");
    CHECK(Rational(25, 11).decimal(4) == "2.2727");
    CHECK(Rational(29, 9).decimal(4) == "3.2222");
    CHECK(Rational(1).decimal(4) == "1.0000");
    CHECK(Rational(1, 8).decimal(4) == "0.1250");
    CHECK(Rational(1, 2).decimal(0) == "1");        // 0.5 -> 1
    CHECK(Rational(1, 20000).decimal(4) == "0.0001");  // exact half at the last place
    CHECK(Rational(3, 2).decimal(0) == "2");
    CHECK(Rational(-5, 3).decimal(4) == "-1.6667");
    CHECK(Rational(5, 3).decimal(6) == "1.666667");
    CHECK(Rational(12, 5).decimal(4) == "2.4000");
}

TEST_CASE("to_double is close enough for reporting") {
    CHECK(Rational(5, 3).to_double() == doctest::Approx(1.6666666667).epsilon(1e-9));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(0.3333333333).epsilon(1e-9));
}
