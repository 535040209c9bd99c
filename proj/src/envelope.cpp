#include "approxconv/envelope.hpp"

#include "approxconv/extremal.hpp"
#include "approxconv/simplex_lp.hpp"
#include "approxconv/simplex_point.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace approxconv {

void SampleSet::validate() const {
    if (n < 1) throw std::invalid_argument("SampleSet: n must be >= 1");
    if (base < 2) throw std::invalid_argument("SampleSet: B must be >= 2");
    if (epsilon.sign() <= 0) throw std::invalid_argument("SampleSet: epsilon must be positive");
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("SampleSet: needs at least one point, with one y per x");
    std::set<std::vector<std::string>> seen;
    for (const auto& x : xs) {
        if (static_cast<int>(x.size()) != n)
            throw std::invalid_argument("SampleSet: point dimension mismatch");
        std::vector<std::string> key;
        for (const auto& c : x) key.push_back(c.str());
        if (!seen.insert(key).second)
            throw std::invalid_argument("SampleSet: duplicate sample point");
    }
}

SampleSet SampleSet::from_json(const nlohmann::ordered_json& j) {
    SampleSet s;
    s.n = j.at("n").get<int>();
    s.base = j.at("B").get<int>();
    s.epsilon = Rational::parse(j.at("epsilon").get<std::string>());
    for (const auto& p : j.at("points")) {
        std::vector<Rational> x;
        for (const auto& c : p.at("x")) x.push_back(Rational::parse(c.get<std::string>()));
        s.xs.push_back(std::move(x));
        s.ys.push_back(Rational::parse(p.at("y").get<std::string>()));
    }
    s.validate();
    return s;
}

nlohmann::ordered_json SampleSet::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["B"] = base;
    j["epsilon"] = epsilon.str();
    j["points"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < xs.size(); ++i) {
        nlohmann::ordered_json p;
        p["x"] = nlohmann::ordered_json::array();
        for (const auto& c : xs[i]) p["x"].push_back(c.str());
        p["y"] = ys[i].str();
        j["points"].push_back(std::move(p));
    }
    return j;
}

EnvelopeQuery envelope_at(const SampleSet& s, const std::vector<Rational>& x) {
    s.validate();
    if (static_cast<int>(x.size()) != s.n)
        throw std::invalid_argument("envelope_at: query dimension mismatch");

    const size_t N = s.xs.size();
    std::vector<std::vector<Rational>> A(static_cast<size_t>(s.n) + 1,
                                         std::vector<Rational>(N, Rational(0)));
    std::vector<Rational> b;
    for (int k = 0; k < s.n; ++k) {
        for (size_t i = 0; i < N; ++i) A[static_cast<size_t>(k)][i] = s.xs[i][static_cast<size_t>(k)];
        b.push_back(x[static_cast<size_t>(k)]);
    }
    for (size_t i = 0; i < N; ++i) A[static_cast<size_t>(s.n)][i] = Rational(1);
    b.push_back(Rational(1));

    std::vector<Rational> c;
    for (size_t i = 0; i < N; ++i) c.push_back(-s.ys[i]);

    const LpSolution sol = lp_maximize(A, b, c);
    EnvelopeQuery out;
    if (sol.status != LpStatus::Optimal) return out;  // outside the hull
    out.feasible = true;
    out.g_value = -sol.objective;
    out.weights = sol.x;
    return out;
}

nlohmann::ordered_json DecompositionReport::to_json() const {
    nlohmann::ordered_json j;
    j["pass"] = pass;
    j["points"] = points;
    j["bound"] = bound.str();
    j["max_gap"] = max_gap.str();
    j["max_gap_decimal"] = max_gap.to_double();
    j["max_gap_points"] = nlohmann::ordered_json::array();
    for (const auto& p : max_gap_points) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& c : p) a.push_back(c.str());
        j["max_gap_points"].push_back(std::move(a));
    }
    j["failures"] = failures;
    return j;
}

DecompositionReport verify_decomposition(const SampleSet& s) {
    s.validate();
    DecompositionReport report;
    report.points = s.xs.size();
    report.bound = kappa(s.n, s.base) * s.epsilon;
    const Rational half = report.bound / Rational(2);

    for (size_t i = 0; i < s.xs.size(); ++i) {
        const EnvelopeQuery q = envelope_at(s, s.xs[i]);
        if (!q.feasible) {
            report.failures.push_back("sample point unexpectedly outside its own hull");
            continue;
        }
        const Rational gap = s.ys[i] - q.g_value;
        std::ostringstream where;
        for (size_t k = 0; k < s.xs[i].size(); ++k)
            where << (k ? "," : "(") << s.xs[i][k].str();
        where << ")";
        if (gap.sign() < 0)
            report.failures.push_back("envelope exceeds f at " + where.str() +
                                      ": gap = " + gap.str());
        if (gap > report.bound)
            report.failures.push_back("gap " + gap.str() + " exceeds bound " +
                                      report.bound.str() + " at " + where.str() +
                                      " (sample is not epsilon-convex for this B, n)");
        // |f - g0| <= bound/2 for g0 = g + bound/2, equivalent by construction
        const Rational centered = gap - half;
        if (centered > half || -centered > half)
            report.failures.push_back("centered decomposition violated at " + where.str());

        if (gap > report.max_gap) {
            report.max_gap = gap;
            report.max_gap_points.clear();
        }
        if (gap == report.max_gap && report.max_gap_points.size() < 16)
            report.max_gap_points.push_back(s.xs[i]);
    }
    report.pass = report.failures.empty();
    return report;
}

nlohmann::ordered_json BestConstantReport::to_json() const {
    nlohmann::ordered_json j;
    j["kappa"] = kappa_value.str();
    j["gap_attains_kappa"] = gap_attains_kappa;
    j["decomposition"] = decomposition.to_json();
    return j;
}

BestConstantReport best_constant_witness(int n, int base, int grid_denominator) {
    if (n < 1) throw std::invalid_argument("best_constant_witness: n must be >= 1");
    if (grid_denominator < n + 1)
        throw std::invalid_argument("best_constant_witness: grid denominator below n+1");
    if (grid_denominator % (n + 1) != 0)
        throw std::invalid_argument(
            "best_constant_witness: grid denominator must be divisible by n+1 "
            "so the barycenter is a grid point");

    SampleSet s;
    s.n = n;
    s.base = base;
    s.epsilon = Rational(1);

    // all compositions of the denominator into n+1 nonnegative parts
    std::vector<int> parts(static_cast<size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            parts[static_cast<size_t>(pos)] = left;
            std::vector<Rational> coords;
            for (int p : parts) coords.push_back(Rational(p, grid_denominator));
            SimplexPoint point(coords);
            s.xs.emplace_back(coords.begin(), coords.end() - 1);  // drop the last coordinate
            s.ys.push_back(eval_E(point, base).value);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, grid_denominator);

    BestConstantReport report;
    report.decomposition = verify_decomposition(s);
    report.kappa_value = kappa(n, base);

    std::vector<Rational> bary(static_cast<size_t>(n), Rational(1, n + 1));
    bool at_barycenter = false;
    for (const auto& p : report.decomposition.max_gap_points)
        if (p == bary) at_barycenter = true;
    report.gap_attains_kappa =
        report.decomposition.max_gap == report.kappa_value && at_barycenter;
    return report;
}

}  // namespace approxconv
