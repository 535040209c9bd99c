#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace approxconv {

// Exact arbitrary-precision rational, the scalar type for everything that
// must be decided exactly (coordinates, Kraft weights, E values, kappa,
// LP pivots). Always stored in lowest terms with a positive denominator,
// so equality is structural and values can live in ordered containers.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(int n) : q_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    // Accepts "p/q", "p", or "-p/q"; the denominator must be positive.
    static Rational parse(const std::string& s);

    // base^exp and base^-exp as exact rationals (base >= 2, exp >= 0).
    static Rational power(long base, unsigned long exp);
    static Rational inverse_power(long base, unsigned long exp);

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    // Fixed-point rendering with `places` digits, rounding halves away
    // from zero (5/3 -> "1.6667" at 4 places).
    std::string decimal(int places) const;

    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace approxconv
