#include "approxconv/checks.hpp"

#include "approxconv/extremal.hpp"

#include <algorithm>
#include <stdexcept>

namespace approxconv {

namespace {

constexpr uint64_t kSaltApproxConvex = 0xac01;
constexpr uint64_t kSaltConcave = 0xac02;
constexpr uint64_t kSaltDominance = 0xac03;
constexpr uint64_t kSaltSandwich = 0xac04;
constexpr size_t kMaxCounterexamples = 10;

nlohmann::ordered_json point_json(const SimplexPoint& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p.coords()) a.push_back(c.str());
    return a;
}

nlohmann::ordered_json weights_json(const std::vector<Rational>& w) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : w) a.push_back(c.str());
    return a;
}

// choose k distinct values out of 0..n-1 via partial Fisher-Yates
std::vector<int> sample_subset(SplitMix64& rng, int n, int k) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<uint64_t>(n - i)));
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

// weights in Delta_{B-1} on a random support, grid denominators <= max_den
std::vector<Rational> sample_weights(SplitMix64& rng, int count, int max_den = 64) {
    const int s = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(count)));
    const std::vector<int> supp = sample_subset(rng, count, s);
    const int q = s + static_cast<int>(rng.below(static_cast<uint64_t>(max_den - s + 1)));
    std::vector<int> cuts = s > 1 ? sample_subset(rng, q - 1, s - 1) : std::vector<int>{};
    for (int& c : cuts) ++c;  // cut positions in 1..q-1
    std::vector<Rational> w(static_cast<size_t>(count), Rational(0));
    int prev = 0;
    for (int i = 0; i < s; ++i) {
        const int next = i + 1 < s ? cuts[static_cast<size_t>(i)] : q;
        w[static_cast<size_t>(supp[static_cast<size_t>(i)])] = Rational(next - prev, q);
        prev = next;
    }
    return w;
}

struct SlackTracker {
    TrialReport& report;

    void record_exact(const Rational& slack, nlohmann::ordered_json detail) {
        if (!report.have_slack || slack < report.worst_slack_exact) {
            report.worst_slack_exact = slack;
            report.have_slack = true;
        }
        if (slack.sign() < 0) {
            ++report.violations;
            if (report.counterexamples.size() < kMaxCounterexamples) {
                detail["slack"] = slack.str();
                report.counterexamples.push_back(std::move(detail));
            }
        }
    }

    void record_float(double slack, nlohmann::ordered_json detail) {
        if (!report.have_slack || slack < report.worst_slack_float) {
            report.worst_slack_float = slack;
            report.have_slack = true;
        }
        if (slack < -float_tolerance) {
            ++report.violations;
            if (report.counterexamples.size() < kMaxCounterexamples) {
                detail["slack"] = slack;
                report.counterexamples.push_back(std::move(detail));
            }
        }
    }
};

}  // namespace

SplitMix64 trial_stream(uint64_t seed, uint64_t suite_salt, uint64_t trial) {
    SplitMix64 mixer(seed ^ (suite_salt * 0x100000001b3ULL));
    mixer.state += trial * 0x9e3779b97f4a7c15ULL;
    mixer.next();
    return mixer;
}

SimplexPoint sample_grid_point(SplitMix64& rng, int n, int support_size, int max_den) {
    if (support_size < 1 || support_size > n + 1)
        throw std::invalid_argument("sample_grid_point: bad support size");
    if (max_den < support_size)
        throw std::invalid_argument("sample_grid_point: denominator cap below support size");
    const std::vector<int> supp = sample_subset(rng, n + 1, support_size);
    const int s = support_size;
    const int q = s + static_cast<int>(rng.below(static_cast<uint64_t>(max_den - s + 1)));
    std::vector<int> cuts = s > 1 ? sample_subset(rng, q - 1, s - 1) : std::vector<int>{};
    for (int& c : cuts) ++c;
    std::vector<Rational> coords(static_cast<size_t>(n) + 1, Rational(0));
    int prev = 0;
    for (int i = 0; i < s; ++i) {
        const int next = i + 1 < s ? cuts[static_cast<size_t>(i)] : q;
        coords[static_cast<size_t>(supp[static_cast<size_t>(i)])] = Rational(next - prev, q);
        prev = next;
    }
    return SimplexPoint(std::move(coords));
}

Evaluator Evaluator::exact_fn(std::string name, std::function<Rational(const SimplexPoint&)> f) {
    Evaluator e;
    e.mode = Mode::Exact;
    e.name = std::move(name);
    e.exact = std::move(f);
    return e;
}

Evaluator Evaluator::float_fn(std::string name, std::function<double(const SimplexPoint&)> f) {
    Evaluator e;
    e.mode = Mode::Floating;
    e.name = std::move(name);
    e.floating = std::move(f);
    return e;
}

double Evaluator::value_as_double(const SimplexPoint& x) const {
    return mode == Mode::Exact ? exact(x).to_double() : floating(x);
}

nlohmann::ordered_json TrialReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["n"] = n;
    j["B"] = base;
    j["trials"] = trials;
    j["violations"] = violations;
    j["seed"] = seed;
    j["mode"] = exact_mode ? "exact" : "float";
    if (have_slack) {
        if (exact_mode)
            j["worst_slack"] = worst_slack_exact.str();
        else
            j["worst_slack"] = worst_slack_float;
    } else {
        j["worst_slack"] = nullptr;
    }
    j["assumptions"] = assumptions;
    j["counterexamples"] = counterexamples;
    j["pass"] = passed();
    return j;
}

TrialReport check_approx_convex(const Evaluator& f, int n, int base, long trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("check_approx_convex: trials must be >= 1");
    TrialReport report;
    report.suite = "approx-convex";
    report.n = n;
    report.base = base;
    report.trials = trials;
    report.seed = seed;
    report.exact_mode = f.mode == Evaluator::Mode::Exact;
    SlackTracker tracker{report};

    for (long i = 0; i < trials; ++i) {
        SplitMix64 rng = trial_stream(seed, kSaltApproxConvex, static_cast<uint64_t>(i));
        std::vector<SimplexPoint> xs;
        for (int k = 0; k < base; ++k) {
            // first point stratified over support sizes, the rest free
            const int s = k == 0 ? 1 + static_cast<int>(i % (n + 1))
                                 : 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n + 1)));
            xs.push_back(sample_grid_point(rng, n, s));
        }
        const std::vector<Rational> t = sample_weights(rng, base);
        const SimplexPoint x = convex_combination(xs, t);

        nlohmann::ordered_json detail;
        detail["points"] = nlohmann::ordered_json::array();
        for (const auto& p : xs) detail["points"].push_back(point_json(p));
        detail["t"] = weights_json(t);
        detail["x"] = point_json(x);

        if (report.exact_mode) {
            Rational rhs(1);
            for (size_t k = 0; k < xs.size(); ++k) rhs += t[k] * f.exact(xs[k]);
            tracker.record_exact(rhs - f.exact(x), std::move(detail));
        } else {
            double rhs = 1.0;
            for (size_t k = 0; k < xs.size(); ++k) rhs += t[k].to_double() * f.floating(xs[k]);
            tracker.record_float(rhs - f.floating(x), std::move(detail));
        }
    }
    return report;
}

TrialReport check_concave(const Evaluator& f, int n, long trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("check_concave: trials must be >= 1");
    TrialReport report;
    report.suite = "concave";
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.exact_mode = f.mode == Evaluator::Mode::Exact;
    SlackTracker tracker{report};

    for (long i = 0; i < trials; ++i) {
        SplitMix64 rng = trial_stream(seed, kSaltConcave, static_cast<uint64_t>(i));
        const int sx = 1 + static_cast<int>(i % (n + 1));
        const SimplexPoint x = sample_grid_point(rng, n, sx);
        const int sy = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n + 1)));
        const SimplexPoint y = sample_grid_point(rng, n, sy);
        const int q = 1 + static_cast<int>(rng.below(64));
        const Rational lambda(static_cast<long>(rng.below(static_cast<uint64_t>(q) + 1)), q);
        const SimplexPoint mid = convex_combination({x, y}, {lambda, Rational(1) - lambda});

        nlohmann::ordered_json detail;
        detail["x"] = point_json(x);
        detail["y"] = point_json(y);
        detail["lambda"] = lambda.str();

        if (report.exact_mode) {
            const Rational rhs = lambda * f.exact(x) + (Rational(1) - lambda) * f.exact(y);
            tracker.record_exact(f.exact(mid) - rhs, std::move(detail));
        } else {
            const double l = lambda.to_double();
            const double rhs = l * f.floating(x) + (1.0 - l) * f.floating(y);
            tracker.record_float(f.floating(mid) - rhs, std::move(detail));
        }
    }
    return report;
}

TrialReport check_dominance(const Evaluator& h, int n, int base, long trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("check_dominance: trials must be >= 1");
    // vertex precondition, rejected before any trial runs
    for (int j = 0; j <= n; ++j) {
        const SimplexPoint ej = vertex(n, j);
        if (h.mode == Evaluator::Mode::Exact) {
            if (h.exact(ej).sign() > 0)
                throw std::invalid_argument("check_dominance: h(e(" + std::to_string(j) +
                                            ")) > 0");
        } else if (h.floating(ej) > float_tolerance) {
            throw std::invalid_argument("check_dominance: h(e(" + std::to_string(j) + ")) > 0");
        }
    }

    TrialReport report;
    report.suite = "dominance";
    report.n = n;
    report.base = base;
    report.trials = trials;
    report.seed = seed;
    report.exact_mode = h.mode == Evaluator::Mode::Exact;
    report.assumptions.push_back("h is approximately convex w.r.t. Delta_{B-1} (caller-certified)");
    SlackTracker tracker{report};

    for (long i = 0; i < trials; ++i) {
        SplitMix64 rng = trial_stream(seed, kSaltDominance, static_cast<uint64_t>(i));
        const int s = 1 + static_cast<int>(i % (n + 1));
        const SimplexPoint x = sample_grid_point(rng, n, s);
        const Rational e_val = eval_E(x, base).value;

        nlohmann::ordered_json detail;
        detail["x"] = point_json(x);
        detail["E"] = e_val.str();

        if (report.exact_mode)
            tracker.record_exact(e_val - h.exact(x), std::move(detail));
        else
            tracker.record_float(e_val.to_double() - h.floating(x), std::move(detail));
    }
    return report;
}

TrialReport check_sandwich(int n, int base, long trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("check_sandwich: trials must be >= 1");
    TrialReport report;
    report.suite = "sandwich";
    report.n = n;
    report.base = base;
    report.trials = trials;
    report.seed = seed;
    report.exact_mode = false;  // the entropy side is floating
    SlackTracker tracker{report};

    for (long i = 0; i < trials; ++i) {
        SplitMix64 rng = trial_stream(seed, kSaltSandwich, static_cast<uint64_t>(i));
        const int s = 1 + static_cast<int>(i % (n + 1));
        const SimplexPoint x = sample_grid_point(rng, n, s);
        const double e_val = eval_E(x, base).value.to_double();
        const double f_val = entropy_F(x, base);

        nlohmann::ordered_json detail;
        detail["x"] = point_json(x);
        detail["E"] = e_val;
        detail["F"] = f_val;
        tracker.record_float(std::min(e_val - f_val, f_val + 1.0 - e_val), std::move(detail));
    }
    return report;
}

}  // namespace approxconv
