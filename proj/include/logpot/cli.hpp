#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace logpot {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2, kExitNumerical = 3 };

struct RunSpec {
    std::string subcommand;          ///< solve | majorize | hierarchy | hausdorff | ladder | conjecture
    std::string input_path;
    std::string output_path;         ///< report directory; empty prints to stdout
    double tol = 1e-8;
    std::uint64_t seed = 1;
    std::size_t trials = 100000;
    std::string k = "all";           ///< level, or "all"
    std::optional<std::size_t> m;
    double alpha = 2.0;
    std::vector<std::size_t> levels;
    int threads = 0;                 ///< 0 keeps the OpenMP default
    bool merge_coincident = false;
    bool swap = false;               ///< majorize: compare (Z, b) against (W, a)
};

/// Runs one subcommand. Reports go to files under output_path (or `out`), diagnostics to `err`.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace logpot
