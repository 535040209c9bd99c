#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace approxconv::cli {

struct CliConfig {
    uint64_t seed = 0;
    long trials = 10000;
    std::string format = "json";  // json|csv where both make sense
};

// Each command writes machine-readable output to `os` and returns the
// process exit code: 0 on success with zero violations, nonzero otherwise.
int cmd_kappa_table(int b_max, int n_max, const CliConfig& cfg, std::ostream& os);
int cmd_extreme_tuples(int n, int base, const CliConfig& cfg, std::ostream& os);
int cmd_eval(const std::vector<std::string>& coords, int base, const CliConfig& cfg,
             std::ostream& os);
int cmd_surface(int base, int resolution, const CliConfig& cfg, std::ostream& os);
int cmd_verify(const std::string& suite, int n, int base, int grid, const CliConfig& cfg,
               std::ostream& os);
int cmd_envelope(const std::string& input_path, const std::vector<std::string>& query,
                 const CliConfig& cfg, std::ostream& os);

}  // namespace approxconv::cli
