#include "approxconv/cli_commands.hpp"

#include "approxconv/checks.hpp"
#include "approxconv/envelope.hpp"
#include "approxconv/extremal.hpp"
#include "approxconv/extreme_set.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace approxconv::cli {

using nlohmann::ordered_json;

namespace {

void emit(const ordered_json& j, std::ostream& os) { os << j.dump(2) << '\n'; }

}  // namespace

int cmd_kappa_table(int b_max, int n_max, const CliConfig& cfg, std::ostream& os) {
    if (b_max < 2 || n_max < 1)
        throw std::invalid_argument("kappa-table: need B >= 2 and n >= 1");
    if (cfg.format == "csv") {
        os << "B,n,kappa,kappa_4dp\n";
        for (int B = 2; B <= b_max; ++B)
            for (int n = 1; n <= n_max; ++n) {
                const Rational k = kappa(n, B);
                os << B << ',' << n << ',' << k.str() << ',' << k.decimal(4) << '\n';
            }
        return 0;
    }
    ordered_json j;
    j["B_max"] = b_max;
    j["n_max"] = n_max;
    j["rows"] = ordered_json::array();
    for (int B = 2; B <= b_max; ++B) {
        ordered_json row;
        row["B"] = B;
        row["kappa"] = ordered_json::array();
        row["kappa_4dp"] = ordered_json::array();
        for (int n = 1; n <= n_max; ++n) {
            const Rational k = kappa(n, B);
            row["kappa"].push_back(k.str());
            row["kappa_4dp"].push_back(k.decimal(4));
        }
        j["rows"].push_back(std::move(row));
    }
    emit(j, os);
    return 0;
}

int cmd_extreme_tuples(int n, int base, const CliConfig&, std::ostream& os) {
    emit(enumerate_extreme(n, base).to_json(), os);
    return 0;
}

int cmd_eval(const std::vector<std::string>& coords, int base, const CliConfig&,
             std::ostream& os) {
    std::vector<Rational> c;
    for (const auto& s : coords) c.push_back(Rational::parse(s));
    SimplexPoint x(std::move(c));
    emit(eval_E(x, base).to_json(), os);
    return 0;
}

int cmd_surface(int base, int resolution, const CliConfig&, std::ostream& os) {
    os << surface_grid_csv(base, resolution);
    return 0;
}

int cmd_verify(const std::string& suite, int n, int base, int grid, const CliConfig& cfg,
               std::ostream& os) {
    if (suite == "best-constant") {
        const BestConstantReport report = best_constant_witness(n, base, grid);
        emit(report.to_json(), os);
        return report.decomposition.pass && report.gap_attains_kappa ? 0 : 1;
    }

    const Evaluator E_eval = Evaluator::exact_fn(
        "E", [base](const SimplexPoint& x) { return eval_E(x, base).value; });
    TrialReport report;
    if (suite == "approx-convex") {
        report = check_approx_convex(E_eval, n, base, cfg.trials, cfg.seed);
    } else if (suite == "concave") {
        report = check_concave(E_eval, n, cfg.trials, cfg.seed);
        report.base = base;
    } else if (suite == "dominance") {
        const Evaluator F_eval = Evaluator::float_fn(
            "F", [base](const SimplexPoint& x) { return entropy_F(x, base); });
        report = check_dominance(F_eval, n, base, cfg.trials, cfg.seed);
    } else if (suite == "sandwich") {
        report = check_sandwich(n, base, cfg.trials, cfg.seed);
    } else {
        throw std::invalid_argument(
            "verify: unknown suite \"" + suite +
            "\" (expected approx-convex|concave|dominance|sandwich|best-constant)");
    }
    emit(report.to_json(), os);
    return report.passed() ? 0 : 1;
}

int cmd_envelope(const std::string& input_path, const std::vector<std::string>& query,
                 const CliConfig&, std::ostream& os) {
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("envelope: cannot open " + input_path);
    ordered_json parsed = ordered_json::parse(in);
    const SampleSet samples = SampleSet::from_json(parsed);

    std::vector<Rational> x;
    for (const auto& s : query) x.push_back(Rational::parse(s));
    const EnvelopeQuery q = envelope_at(samples, x);

    ordered_json j;
    j["query"] = ordered_json::array();
    for (const auto& c : x) j["query"].push_back(c.str());
    j["feasible"] = q.feasible;
    if (!q.feasible) {
        j["error"] = "query point lies outside the convex hull of the samples";
        emit(j, os);
        return 1;
    }
    j["g"] = q.g_value.str();
    j["g_decimal"] = q.g_value.to_double();
    j["bound"] = (kappa(samples.n, samples.base) * samples.epsilon).str();
    j["witness"] = ordered_json::array();
    for (size_t i = 0; i < q.weights.size(); ++i) {
        if (q.weights[i].is_zero()) continue;
        ordered_json w;
        w["index"] = i;
        w["weight"] = q.weights[i].str();
        j["witness"].push_back(std::move(w));
    }
    // f and the gap are known when the query coincides with a sample
    j["f"] = nullptr;
    j["gap"] = nullptr;
    for (size_t i = 0; i < samples.xs.size(); ++i) {
        if (samples.xs[i] == x) {
            j["f"] = samples.ys[i].str();
            j["gap"] = (samples.ys[i] - q.g_value).str();
            break;
        }
    }
    emit(j, os);
    return 0;
}

}  // namespace approxconv::cli
