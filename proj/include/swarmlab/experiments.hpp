#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarmlab/variants.hpp"

namespace swarmlab {

/// One experiment: an objective, a variant, a swarm configuration, and the
/// repetition protocol. Run r uses seed base_seed + r.
struct ExperimentSpec {
    std::string objective_name = "griewank";
    int n_dims = 30;
    VariantSpec variant{};
    SwarmConfig swarm{};
    int repetitions = 20;
    std::uint64_t base_seed = 1;
    std::vector<int> snapshot_iterations{10, 2000};
    double epsilon = 1e-15;  // iterations-to-threshold target

    void validate() const;  // throws ConfigError
};

/// Best-so-far fitness after initialization (index 0) and after every
/// iteration; always non-increasing.
struct RunTrace {
    std::uint64_t seed = 0;
    std::vector<double> best_fitness_per_iteration;
    std::vector<double> final_best_position;
};

struct SnapshotStats {
    int iteration = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation over runs
    double min = 0.0;
    double max = 0.0;
};

/// Mean trace and summary statistics across the repetitions of one spec.
/// Aggregation order is fixed (ascending run index), so parallel and serial
/// execution produce bit-identical results.
struct AggregateResult {
    std::vector<RunTrace> runs;
    std::vector<double> mean_trace;
    std::vector<SnapshotStats> snapshots;
    std::vector<std::optional<int>> iters_to_threshold;  // per run
    std::optional<double> iters_to_threshold_mean;       // over runs that reached
    int runs_reached = 0;
    double epsilon = 0.0;
};

/// Smallest iteration index whose best-so-far value is <= epsilon, if any.
std::optional<int> iterations_to_threshold(const RunTrace& trace, double epsilon);

/// Executes init plus it_max stepper iterations under the given seed.
RunTrace run_single(const ExperimentSpec& spec, std::uint64_t seed);

/// Deterministic reduction of already-executed runs (exposed for tests).
AggregateResult aggregate_traces(std::vector<RunTrace> runs,
                                 const std::vector<int>& snapshot_iterations,
                                 double epsilon);

/// Runs all repetitions (in parallel when jobs > 1; results are identical
/// either way) and aggregates them. A failed run aborts the aggregate with
/// the failing seed in the error message.
AggregateResult run_repeated(const ExperimentSpec& spec, int jobs = 1);

struct ComparisonRow {
    std::string variant;
    std::vector<double> snapshot_means;
    std::optional<double> iters_to_threshold_mean;
    int runs_reached = 0;
    double epsilon = 0.0;
};

struct ComparisonTable {
    std::string objective;
    int n_dims = 0;
    std::vector<int> snapshot_iterations;
    std::vector<ComparisonRow> rows;  // sorted by final snapshot mean, ascending
};

/// Builds the comparison table from specs that share objective, dims, swarm
/// configuration, repetitions and snapshots (throws ValidationError
/// otherwise). The overload taking results skips re-running.
ComparisonTable compare_variants(std::span<const ExperimentSpec> specs, int jobs = 1);
ComparisonTable compare_variants(std::span<const ExperimentSpec> specs,
                                 std::span<const AggregateResult> results);

/// Default iterations-to-threshold epsilon per objective.
double default_epsilon(std::string_view objective_name);

} // namespace swarmlab
