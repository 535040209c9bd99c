#include "approxconv/exponent_tuple.hpp"

#include <algorithm>
#include <stdexcept>

namespace approxconv {

ExponentTuple::ExponentTuple(std::vector<int> entries, int base)
    : entries_(std::move(entries)), base_(base) {
    if (base_ < 2) throw std::invalid_argument("ExponentTuple: base must be >= 2");
    if (entries_.empty()) throw std::invalid_argument("ExponentTuple: empty tuple");
    for (int m : entries_)
        if (m < 0) throw std::invalid_argument("ExponentTuple: negative exponent");
}

Rational ExponentTuple::kraft_weight() const {
    Rational w;
    for (int m : entries_) w += Rational::inverse_power(base_, static_cast<unsigned long>(m));
    return w;
}

bool ExponentTuple::is_feasible(const Rational& budget) const {
    return kraft_weight() <= budget;
}

bool ExponentTuple::is_minimal(const Rational& budget) const {
    const Rational w = kraft_weight();
    if (w > budget) return false;
    for (int m : entries_) {
        if (m < 1) continue;
        // decrementing m multiplies its term by B
        Rational term = Rational::inverse_power(base_, static_cast<unsigned long>(m));
        if (w + term * Rational(base_ - 1) <= budget) return false;
    }
    return true;
}

bool ExponentTuple::is_nonincreasing() const {
    return std::is_sorted(entries_.rbegin(), entries_.rend());
}

ExponentTuple ExponentTuple::sorted_desc() const {
    std::vector<int> e = entries_;
    std::sort(e.rbegin(), e.rend());
    return ExponentTuple(std::move(e), base_);
}

int eta(int n, const Rational& budget, int base) {
    if (budget.sign() <= 0) throw std::invalid_argument("eta: budget must be positive");
    if (n < 0) throw std::invalid_argument("eta: negative n");
    if (base < 2) throw std::invalid_argument("eta: base must be >= 2");
    const Rational target(n + base);
    int j = 2;
    Rational scaled = budget * Rational::power(base, 2);
    while (scaled < target) {
        scaled *= Rational(base);
        ++j;
    }
    return j;
}

}  // namespace approxconv
