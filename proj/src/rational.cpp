#include "approxconv/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace approxconv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in \"" + s + "\"");
    if (neg) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::power(long base, unsigned long exp) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return Rational(mpq_class(p));
}

Rational Rational::inverse_power(long base, unsigned long exp) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), exp);
    mpq_class q(1, p);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) { q_ += o.q_; return *this; }
Rational& Rational::operator-=(const Rational& o) { q_ -= o.q_; return *this; }
Rational& Rational::operator*=(const Rational& o) { q_ *= o.q_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int places) const {
    if (places < 0) throw std::invalid_argument("Rational: negative decimal places");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class num = abs(q_.get_num()) * scale;
    const mpz_class& den = q_.get_den();
    // floor((2*num + den) / (2*den)) rounds halves up in magnitude
    mpz_class scaled = (2 * num + den) / (2 * den);
    mpz_class ip = scaled / scale, fp = scaled % scale;
    std::string out = (sign() < 0 && scaled != 0) ? "-" : "";
    out += ip.get_str();
    if (places > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(static_cast<size_t>(places) - frac.size(), '0') + frac;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace approxconv
