#include "approxconv/cli_commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

int main(int argc, char** argv) {
    using approxconv::cli::CliConfig;
    CLI::App app{"Exact computation of the extremal approximately convex function E on the "
                 "standard simplex, its extreme exponent tuples, the sharp stability constants "
                 "kappa(n,B), and constructive convex-minorant decompositions"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string out_path;
    app.add_option("--seed", cfg.seed, "Seed for all randomized suites (default 0)");
    app.add_option("--trials", cfg.trials, "Trial count for randomized suites (default 10000)");
    app.add_option("--format", cfg.format, "Output format: json|csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    auto* kappa_cmd = app.add_subcommand("kappa-table", "Exact kappa(n,B) table");
    int b_max = 11, n_max = 10;
    kappa_cmd->add_option("--B", b_max, "Largest base B (default 11)");
    kappa_cmd->add_option("--n", n_max, "Largest dimension n (default 10)");

    auto* tuples_cmd = app.add_subcommand("extreme-tuples", "Enumerate the extreme tuple set");
    int tn = 2, tB = 2;
    tuples_cmd->add_option("--n", tn, "Simplex dimension")->required();
    tuples_cmd->add_option("--B", tB, "Base B (default 2)");

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate E at a point, with witness");
    int eB = 2;
    std::vector<std::string> coords;
    eval_cmd->add_option("--B", eB, "Base B (default 2)");
    eval_cmd->add_option("coords", coords, "Barycentric coordinates, e.g. 1/3 1/3 1/3")
        ->required()
        ->expected(-1);

    auto* surface_cmd = app.add_subcommand("surface", "CSV of E(x,y,1-x-y) on a grid");
    int sB = 2, resolution = 12;
    surface_cmd->add_option("--B", sB, "Base B (default 2)");
    surface_cmd->add_option("--grid", resolution, "Grid resolution r (default 12)");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    int vn = 2, vB = 2, vgrid = 12;
    verify_cmd
        ->add_option("suite", suite,
                     "approx-convex | concave | dominance | sandwich | best-constant")
        ->required();
    verify_cmd->add_option("--n", vn, "Simplex dimension (default 2)");
    verify_cmd->add_option("--B", vB, "Base B (default 2)");
    verify_cmd->add_option("--grid", vgrid, "Grid denominator for best-constant (default 12)");

    auto* envelope_cmd = app.add_subcommand("envelope", "Lower convex envelope query");
    std::string in_path;
    std::vector<std::string> query;
    envelope_cmd->add_option("--in", in_path, "Sample set JSON file")->required();
    envelope_cmd->add_option("query", query, "Query point coordinates, e.g. 1/2 1/4")
        ->required()
        ->expected(-1);

    CLI11_PARSE(app, argc, argv);

    std::ofstream out_file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "error: cannot open output file " << out_path << '\n';
            return 2;
        }
        os = &out_file;
    }

    try {
        if (*kappa_cmd) return approxconv::cli::cmd_kappa_table(b_max, n_max, cfg, *os);
        if (*tuples_cmd) return approxconv::cli::cmd_extreme_tuples(tn, tB, cfg, *os);
        if (*eval_cmd) return approxconv::cli::cmd_eval(coords, eB, cfg, *os);
        if (*surface_cmd) return approxconv::cli::cmd_surface(sB, resolution, cfg, *os);
        if (*verify_cmd) return approxconv::cli::cmd_verify(suite, vn, vB, vgrid, cfg, *os);
        if (*envelope_cmd) return approxconv::cli::cmd_envelope(in_path, query, cfg, *os);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
