#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "swarmlab/experiments.hpp"

namespace swarmlab {

/// Thrown by parse_cli for --help (code 0) and usage errors (nonzero code);
/// the message names the offending flag.
struct CliParseExit {
    int code = 0;
    std::string message;
};

/// Parsed command line. Numeric defaults are the benchmark protocol values;
/// jobs and out_dir are execution details and excluded from the config echo.
struct CliConfig {
    std::string subcommand;  // run | compare | paper-repro
    std::vector<std::string> objectives;
    std::vector<int> dims;
    std::vector<std::string> variants;
    int particles = 40;
    int iterations = 2000;
    int repetitions = 20;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    std::string format = "json";  // summary format: json | csv
    int jobs = 1;
    std::vector<int> snapshots;          // empty: defaults to {10, iterations}
    std::optional<double> epsilon;       // unset: per-objective default
    double mu = 0.05;
    double p = 0.02;
    int ne = 3;
    double a = 0.5;
    double wmax = 0.9;
    double wmin = 0.1;
    double c1 = 1.4962;
    double c2 = 1.4962;
    double lower = -100.0;
    double upper = 100.0;
    std::string boundary = "none";

    bool operator==(const CliConfig&) const = default;
};

/// Parses argv (without the program name). SWARMLAB_SEED supplies the seed
/// when --seed is absent.
CliConfig parse_cli(const std::vector<std::string>& args);

/// Resolved snapshot list: explicit --snapshots, else {10, iterations}
/// reduced to the iterations that actually exist, deduplicated ascending.
std::vector<int> resolved_snapshots(const CliConfig& config);

/// Cartesian expansion objectives x dims x variants, in the given order.
std::vector<ExperimentSpec> expand_experiments(const CliConfig& config);

/// Science-parameter echo embedded in summaries; parsing it back yields an
/// equivalent CliConfig (execution knobs excluded).
nlohmann::json config_echo(const CliConfig& config);
CliConfig cli_config_from_echo(const nlohmann::json& echo, const std::string& subcommand);

/// Executes the parsed command: runs the experiment grid, writes
/// <out_dir>/traces.csv and <out_dir>/summary.<format>, prints tables.
/// Returns 0 iff every experiment completed.
int run_cli(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, report errors on stderr.
int cli_main(int argc, char** argv);

} // namespace swarmlab
