#include "approxconv/extremal.hpp"

#include "approxconv/extreme_set.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace approxconv {

Rational LinearPiece::weight() const {
    Rational w;
    for (int m : coefficients) w += Rational::inverse_power(base, static_cast<unsigned long>(m));
    return w;
}

Rational LinearPiece::value_at(const SimplexPoint& x) const {
    Rational v;
    for (size_t i = 0; i < support.size(); ++i)
        v += Rational(coefficients[i]) * x.coord(support[i]);
    return v;
}

nlohmann::ordered_json LinearPiece::to_json() const {
    nlohmann::ordered_json j;
    j["support"] = support;
    j["coefficients"] = coefficients;
    j["B"] = base;
    return j;
}

nlohmann::ordered_json EvalResult::to_json() const {
    nlohmann::ordered_json j;
    j["value"] = value.str();
    j["value_decimal"] = value.to_double();
    j["witness"] = witness.to_json();
    return j;
}

EvalResult eval_E(const SimplexPoint& x, int base) {
    if (base < 2) throw std::invalid_argument("eval_E: base must be >= 2");
    const std::vector<int> supp = x.support();
    const int s = static_cast<int>(supp.size());

    if (s == 1) return {Rational(0), LinearPiece{{supp[0]}, {0}, base}};

    // support indices ordered by ascending coordinate (ties by index)
    std::vector<int> order = supp;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return x.coord(a) < x.coord(b); });

    const ExtremeTupleSet& es = extreme_set_cached(s - 1, base);
    const std::vector<int>* best_tuple = nullptr;
    Rational best;
    for (const auto& t : es.tuples) {
        Rational v;
        for (int i = 0; i < s; ++i)
            v += Rational(t[static_cast<size_t>(i)]) * x.coord(order[static_cast<size_t>(i)]);
        if (best_tuple == nullptr || v < best) {
            best = v;
            best_tuple = &t;
        }
    }

    std::vector<int> coeff_by_index(static_cast<size_t>(x.size()), 0);
    for (int i = 0; i < s; ++i)
        coeff_by_index[static_cast<size_t>(order[static_cast<size_t>(i)])] =
            (*best_tuple)[static_cast<size_t>(i)];
    LinearPiece piece;
    piece.base = base;
    piece.support = supp;
    for (int j : supp) piece.coefficients.push_back(coeff_by_index[static_cast<size_t>(j)]);
    return {best, piece};
}

namespace {

// All tuples on s coordinates with entries in [0, bound] and weight <= 1,
// enumerated independently of the eta-tree machinery. Cached per query.
const std::vector<std::vector<int>>& feasible_box(int s, int base, int bound) {
    static std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(s, base, bound);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(s), 0);
    auto rec = [&](auto&& self, int pos, const Rational& weight) -> void {
        if (weight > Rational(1)) return;  // entries only add weight
        if (pos == s) {
            out.push_back(cur);
            return;
        }
        for (int m = 0; m <= bound; ++m) {
            cur[static_cast<size_t>(pos)] = m;
            self(self, pos + 1,
                 weight + Rational::inverse_power(base, static_cast<unsigned long>(m)));
        }
    };
    rec(rec, 0, Rational(0));
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

Rational eval_E_oracle(const SimplexPoint& x, int base, int bound) {
    if (base < 2) throw std::invalid_argument("eval_E_oracle: base must be >= 2");
    if (bound < 1) throw std::invalid_argument("eval_E_oracle: bound must be >= 1");
    const std::vector<int> supp = x.support();
    const int s = static_cast<int>(supp.size());

    for (;; bound += 2) {
        const auto& tuples = feasible_box(s, base, bound);
        const std::vector<int>* best_tuple = nullptr;
        Rational best;
        for (const auto& t : tuples) {
            Rational v;
            for (int i = 0; i < s; ++i)
                v += Rational(t[static_cast<size_t>(i)]) * x.coord(supp[static_cast<size_t>(i)]);
            if (best_tuple == nullptr || v < best) {
                best = v;
                best_tuple = &t;
            }
        }
        if (best_tuple == nullptr) continue;  // bound too small to fit any tuple
        // retry while the witness comes within 1 of the box edge; a cramped
        // box can otherwise hide a better tuple just outside it
        const int top = *std::max_element(best_tuple->begin(), best_tuple->end());
        if (top < bound - 1) return best;
    }
}

Rational explicit_E_n2(const Rational& x, const Rational& y) {
    if (x.sign() <= 0 || y.sign() <= 0 || x + y >= Rational(1))
        throw std::invalid_argument("explicit_E_n2: point not interior to the 2-simplex");
    const Rational a = Rational(1) + x + y;
    const Rational b = Rational(2) - x;
    const Rational c = Rational(2) - y;
    return std::min({a, b, c});
}

double entropy_F(const SimplexPoint& x, int base) {
    if (base < 2) throw std::invalid_argument("entropy_F: base must be >= 2");
    double acc = 0.0;
    for (const auto& c : x.coords()) {
        if (c.is_zero()) continue;
        const double p = c.to_double();
        acc += p * std::log(p);
    }
    return -acc / std::log(static_cast<double>(base));
}

Rational kappa(int n, int base) {
    if (n < 1) throw std::invalid_argument("kappa: n must be >= 1");
    if (base < 2) throw std::invalid_argument("kappa: base must be >= 2");
    // floor(log_B n) by repeated multiplication, never by floating logs
    int level = 0;
    mpz_class pw = 1;
    while (pw * base <= n) {
        pw *= base;
        ++level;
    }
    // smallest s with (n+1-s)/B^level + s/B^(level+1) <= 1
    mpz_class num = mpz_class(base) * (mpz_class(n + 1) - pw);
    mpz_class den = base - 1;
    mpz_class s = (num + den - 1) / den;  // exact ceiling; num > 0
    mpq_class frac(s, n + 1);
    frac.canonicalize();
    return Rational(level) + Rational(std::move(frac));
}

LinearPiece combine_witnesses(const std::vector<LinearPiece>& witnesses,
                              const std::vector<Rational>& weights) {
    if (witnesses.empty()) throw std::invalid_argument("combine_witnesses: no witnesses");
    const int B = witnesses.front().base;
    if (static_cast<int>(witnesses.size()) != B)
        throw std::invalid_argument("combine_witnesses: expected exactly B witnesses");
    if (weights.size() != witnesses.size())
        throw std::invalid_argument("combine_witnesses: weights/witnesses size mismatch");
    Rational wsum;
    for (const auto& w : weights) {
        if (w.sign() < 0) throw std::invalid_argument("combine_witnesses: negative weight");
        wsum += w;
    }
    if (wsum != Rational(1))
        throw std::invalid_argument("combine_witnesses: weights must sum to 1");

    // exponents min over every witness containing the index, +1; the
    // support is the union over witnesses that actually carry weight
    std::map<int, int> min_exp;
    for (size_t k = 0; k < witnesses.size(); ++k) {
        const LinearPiece& p = witnesses[k];
        if (p.base != B) throw std::invalid_argument("combine_witnesses: base mismatch");
        if (p.support.size() != p.coefficients.size() ||
            !std::is_sorted(p.support.begin(), p.support.end()))
            throw std::invalid_argument("combine_witnesses: support mismatch");
        if (!p.feasible()) throw std::invalid_argument("combine_witnesses: infeasible witness");
        for (size_t i = 0; i < p.support.size(); ++i) {
            auto [it, fresh] = min_exp.emplace(p.support[i], p.coefficients[i]);
            if (!fresh) it->second = std::min(it->second, p.coefficients[i]);
        }
    }
    LinearPiece out;
    out.base = B;
    std::set<int> in_support;
    for (size_t k = 0; k < witnesses.size(); ++k) {
        if (weights[k].is_zero()) continue;
        for (int j : witnesses[k].support) in_support.insert(j);
    }
    for (int j : in_support) {
        out.support.push_back(j);
        out.coefficients.push_back(min_exp.at(j) + 1);
    }
    if (!out.feasible())
        throw std::logic_error("combine_witnesses: combined piece infeasible (implementation bug)");
    return out;
}

std::vector<SurfaceRow> surface_grid(int base, int resolution) {
    if (resolution < 1) throw std::invalid_argument("surface_grid: resolution must be >= 1");
    std::vector<SurfaceRow> rows;
    for (int i = 0; i <= resolution; ++i) {
        for (int j = 0; i + j <= resolution; ++j) {
            const Rational x(i, resolution), y(j, resolution);
            const Rational z = Rational(1) - x - y;
            SimplexPoint p({x, y, z});
            rows.push_back({x, y, eval_E(p, base).value});
        }
    }
    return rows;
}

std::string surface_grid_csv(int base, int resolution) {
    std::ostringstream os;
    os << "x,y,E,E_decimal\n";
    for (const auto& row : surface_grid(base, resolution))
        os << row.x.str() << ',' << row.y.str() << ',' << row.value.str() << ','
           << row.value.decimal(6) << '\n';
    return os.str();
}

}  // namespace approxconv
