#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace swarmsync::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitNoSync = 2,
    kExitCheckFailed = 3,
};

struct CommandOptions {
    std::filesystem::path config;
    std::optional<std::filesystem::path> out;
    std::optional<double> target_deg;
    std::optional<double> eta;
    std::optional<std::uint64_t> seed;
    std::optional<double> dt;
    std::optional<double> t_max;
};

/// --out if given, else $SWARMSYNC_OUT, else "swarmsync_out".
std::filesystem::path resolve_out_dir(const CommandOptions& opts);

// Each command prints JSON to `out`; diagnostics go to `err`.
int run_simulate(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_predict(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_reachable(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_synthesize(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_perturb(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_classify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_scenario(const std::string& name, const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace swarmsync::cli
