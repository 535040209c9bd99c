#include "approxconv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace approxconv {

std::vector<std::vector<int>> partition_tuple(const ExponentTuple& t) {
    for (int m : t.entries())
        if (m < 1) throw std::invalid_argument("partition_tuple: every exponent must be >= 1");
    if (!t.is_feasible())
        throw std::invalid_argument("partition_tuple: tuple weight exceeds 1");

    const int B = t.base();
    const Rational cap(1, B);
    std::vector<int> order(t.entries().size());
    std::iota(order.begin(), order.end(), 0);
    // nondecreasing m(j), i.e. nonincreasing weight; ties by index
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return t.entries()[static_cast<size_t>(a)] < t.entries()[static_cast<size_t>(b)];
    });

    std::vector<std::vector<int>> bins(static_cast<size_t>(B));
    std::vector<Rational> load(static_cast<size_t>(B), Rational(0));
    for (int j : order) {
        const Rational w = Rational::inverse_power(
            t.base(), static_cast<unsigned long>(t.entries()[static_cast<size_t>(j)]));
        bool placed = false;
        for (int k = 0; k < B; ++k) {
            if (load[static_cast<size_t>(k)] + w <= cap) {
                load[static_cast<size_t>(k)] += w;
                bins[static_cast<size_t>(k)].push_back(j);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::logic_error("partition_tuple: no admissible bin (implementation bug)");
    }

    size_t covered = 0;
    for (int k = 0; k < B; ++k) {
        if (load[static_cast<size_t>(k)] > cap)
            throw std::logic_error("partition_tuple: bin bound violated (implementation bug)");
        covered += bins[static_cast<size_t>(k)].size();
    }
    if (covered != t.entries().size())
        throw std::logic_error("partition_tuple: indices not covered (implementation bug)");
    return bins;
}

}  // namespace approxconv
