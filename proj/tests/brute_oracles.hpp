#pragma once

// Test-only brute-force oracles, independent of the library's eta-bounded
// generation and LP machinery. They enumerate bounded boxes exhaustively so
// expected values in tests are computed, not copied from the code under test.

#include "approxconv/exponent_tuple.hpp"
#include "approxconv/rational.hpp"

#include <algorithm>
#include <vector>

namespace brute {

using approxconv::ExponentTuple;
using approxconv::Rational;

inline Rational box_weight(const std::vector<int>& t, int base) {
    Rational w;
    for (int m : t) w += Rational::inverse_power(base, static_cast<unsigned long>(m));
    return w;
}

// All nonincreasing tuples with entries in [1, cap], weight <= 1, and no
// feasible single decrement. cap must exceed the largest entry that can
// appear; callers pass a generous margin and the assertion-style checks in
// the tests confirm nothing touches the cap.
inline std::vector<std::vector<int>> minimal_tuples(int size, int base, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(size), 1);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == size) {
            if (box_weight(cur, base) > Rational(1)) return;
            for (int k = 0; k < size; ++k) {
                std::vector<int> dec = cur;
                --dec[static_cast<size_t>(k)];
                if (dec[static_cast<size_t>(k)] >= 0 && box_weight(dec, base) <= Rational(1))
                    return;
            }
            out.push_back(cur);
            return;
        }
        const int hi = pos == 0 ? cap : cur[static_cast<size_t>(pos - 1)];
        for (int m = 1; m <= hi; ++m) {
            cur[static_cast<size_t>(pos)] = m;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace brute
