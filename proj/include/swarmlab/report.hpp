#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace swarmlab {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

/// One (objective, dims, variant) mean trace destined for the long-format CSV.
struct TraceBlock {
    std::string objective;
    int dims = 0;
    std::string variant;
    std::span<const double> mean_trace;
};

/// Header `objective,dims,variant,iteration,mean_best_fitness`, one row per
/// trace entry, LF line endings, blocks in the given order.
void write_trace_csv(std::ostream& out, std::span<const TraceBlock> blocks);

/// One summary line per (objective, dims, variant).
struct SummaryRow {
    std::string objective;
    int dims = 0;
    std::string variant;
    std::uint64_t seed = 0;
    std::vector<std::pair<int, double>> snapshot_means;
    std::optional<double> iters_to_epsilon_mean;
    int runs_reached = 0;
    double epsilon = 0.0;
};

/// `{ "config": <echo>, "results": [...] }`, keys sorted, round-trip numbers.
void write_summary_json(std::ostream& out, const nlohmann::json& config_echo,
                        std::span<const SummaryRow> rows);

/// Flat CSV: identification, snapshot means, threshold stats, then the
/// resolved parameters from the config echo appended to every row.
void write_summary_csv(std::ostream& out, const nlohmann::json& config_echo,
                       std::span<const SummaryRow> rows);

} // namespace swarmlab
