#include "swarmlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "swarmlab/errors.hpp"
#include "swarmlab/objective.hpp"

namespace swarmlab {

void ExperimentSpec::validate() const {
    swarm.validate();
    variant.validate();
    if (n_dims != swarm.n_dims) {
        throw ConfigError("experiment n_dims does not match swarm config n_dims");
    }
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (epsilon <= 0.0) throw ConfigError("epsilon must be > 0");
    for (const int s : snapshot_iterations) {
        if (s < 1 || s > swarm.it_max) {
            throw ConfigError("snapshot iteration " + std::to_string(s) +
                              " outside [1, " + std::to_string(swarm.it_max) + "]");
        }
    }
}

std::optional<int> iterations_to_threshold(const RunTrace& trace, double epsilon) {
    const auto& t = trace.best_fitness_per_iteration;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] <= epsilon) return static_cast<int>(k);
    }
    return std::nullopt;
}

RunTrace run_single(const ExperimentSpec& spec, std::uint64_t seed) {
    spec.validate();
    const ObjectiveFunction objective = lookup(spec.objective_name, spec.n_dims);
    RandomStream rng(seed);
    SwarmState state = init_swarm(spec.swarm, objective, rng);
    RunTrace trace;
    trace.seed = seed;
    trace.best_fitness_per_iteration.reserve(static_cast<std::size_t>(spec.swarm.it_max) + 1);
    trace.best_fitness_per_iteration.push_back(state.global_best_fit);
    for (int k = 0; k < spec.swarm.it_max; ++k) {
        step(state, spec.swarm, spec.variant, objective, rng);
        trace.best_fitness_per_iteration.push_back(state.global_best_fit);
    }
    trace.final_best_position = state.global_best_pos;
    return trace;
}

AggregateResult aggregate_traces(std::vector<RunTrace> runs,
                                 const std::vector<int>& snapshot_iterations,
                                 double epsilon) {
    if (runs.empty()) throw ValidationError("cannot aggregate zero runs");
    const std::size_t len = runs.front().best_fitness_per_iteration.size();
    for (const auto& r : runs) {
        if (r.best_fitness_per_iteration.size() != len) {
            throw ValidationError("trace lengths differ across runs");
        }
    }
    AggregateResult agg;
    agg.epsilon = epsilon;
    agg.mean_trace.assign(len, 0.0);
    for (const auto& r : runs) {  // fixed ascending-run-index accumulation
        for (std::size_t k = 0; k < len; ++k) {
            agg.mean_trace[k] += r.best_fitness_per_iteration[k];
        }
    }
    const double n = static_cast<double>(runs.size());
    for (double& v : agg.mean_trace) v /= n;

    for (const int s : snapshot_iterations) {
        if (s < 0 || static_cast<std::size_t>(s) >= len) {
            throw ValidationError("snapshot iteration " + std::to_string(s) +
                                  " outside the recorded trace");
        }
        SnapshotStats st;
        st.iteration = s;
        st.min = runs.front().best_fitness_per_iteration[static_cast<std::size_t>(s)];
        st.max = st.min;
        double sum = 0.0;
        for (const auto& r : runs) {
            const double v = r.best_fitness_per_iteration[static_cast<std::size_t>(s)];
            sum += v;
            st.min = std::min(st.min, v);
            st.max = std::max(st.max, v);
        }
        st.mean = sum / n;
        double sq = 0.0;
        for (const auto& r : runs) {
            const double d = r.best_fitness_per_iteration[static_cast<std::size_t>(s)] - st.mean;
            sq += d * d;
        }
        st.stddev = runs.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
        agg.snapshots.push_back(st);
    }

    double iter_sum = 0.0;
    for (const auto& r : runs) {
        const auto hit = iterations_to_threshold(r, epsilon);
        agg.iters_to_threshold.push_back(hit);
        if (hit) {
            iter_sum += static_cast<double>(*hit);
            ++agg.runs_reached;
        }
    }
    if (agg.runs_reached > 0) {
        agg.iters_to_threshold_mean = iter_sum / static_cast<double>(agg.runs_reached);
    }
    agg.runs = std::move(runs);
    return agg;
}

AggregateResult run_repeated(const ExperimentSpec& spec, int jobs) {
    spec.validate();
    const int reps = spec.repetitions;
    std::vector<RunTrace> runs(static_cast<std::size_t>(reps));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(reps));
    auto execute = [&](int r) {
        try {
            runs[static_cast<std::size_t>(r)] =
                run_single(spec, spec.base_seed + static_cast<std::uint64_t>(r));
        } catch (...) {
            failures[static_cast<std::size_t>(r)] = std::current_exception();
        }
    };
    if (jobs <= 1 || reps == 1) {
        for (int r = 0; r < reps; ++r) execute(r);
    } else {
        const int workers = std::min(jobs, reps);
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (int r = next.fetch_add(1); r < reps; r = next.fetch_add(1)) execute(r);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (int r = 0; r < reps; ++r) {
        if (failures[static_cast<std::size_t>(r)]) {
            const auto seed = spec.base_seed + static_cast<std::uint64_t>(r);
            try {
                std::rethrow_exception(failures[static_cast<std::size_t>(r)]);
            } catch (const std::exception& e) {
                throw std::runtime_error("experiment run failed (seed " + std::to_string(seed) +
                                         "): " + e.what());
            }
        }
    }
    return aggregate_traces(std::move(runs), spec.snapshot_iterations, spec.epsilon);
}

namespace {

void check_comparable(std::span<const ExperimentSpec> specs) {
    if (specs.empty()) throw ValidationError("compare_variants needs at least one spec");
    const auto& ref = specs.front();
    for (const auto& s : specs) {
        const bool same_swarm = s.swarm.n_particles == ref.swarm.n_particles &&
                                s.swarm.n_dims == ref.swarm.n_dims &&
                                s.swarm.it_max == ref.swarm.it_max &&
                                s.swarm.w_max == ref.swarm.w_max &&
                                s.swarm.w_min == ref.swarm.w_min &&
                                s.swarm.c1 == ref.swarm.c1 && s.swarm.c2 == ref.swarm.c2 &&
                                s.swarm.bounds.lower == ref.swarm.bounds.lower &&
                                s.swarm.bounds.upper == ref.swarm.bounds.upper &&
                                s.swarm.boundary == ref.swarm.boundary;
        if (s.objective_name != ref.objective_name || s.n_dims != ref.n_dims || !same_swarm ||
            s.repetitions != ref.repetitions ||
            s.snapshot_iterations != ref.snapshot_iterations) {
            throw ValidationError(
                "compare_variants requires specs sharing objective, dims, swarm "
                "configuration, repetitions and snapshots");
        }
    }
}

} // namespace

ComparisonTable compare_variants(std::span<const ExperimentSpec> specs,
                                 std::span<const AggregateResult> results) {
    check_comparable(specs);
    if (specs.size() != results.size()) {
        throw ValidationError("compare_variants: specs and results differ in length");
    }
    ComparisonTable table;
    table.objective = specs.front().objective_name;
    table.n_dims = specs.front().n_dims;
    table.snapshot_iterations = specs.front().snapshot_iterations;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        ComparisonRow row;
        row.variant = std::string(variant_name(specs[i].variant.kind));
        for (const auto& st : results[i].snapshots) row.snapshot_means.push_back(st.mean);
        row.iters_to_threshold_mean = results[i].iters_to_threshold_mean;
        row.runs_reached = results[i].runs_reached;
        row.epsilon = results[i].epsilon;
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const ComparisonRow& a, const ComparisonRow& b) {
                  const double fa = a.snapshot_means.empty() ? 0.0 : a.snapshot_means.back();
                  const double fb = b.snapshot_means.empty() ? 0.0 : b.snapshot_means.back();
                  if (fa != fb) return fa < fb;
                  return a.variant < b.variant;
              });
    return table;
}

ComparisonTable compare_variants(std::span<const ExperimentSpec> specs, int jobs) {
    check_comparable(specs);
    std::vector<AggregateResult> results;
    results.reserve(specs.size());
    for (const auto& s : specs) results.push_back(run_repeated(s, jobs));
    return compare_variants(specs, results);
}

double default_epsilon(std::string_view objective_name) {
    if (objective_name == "rastrigin") return 1e-12;
    return 1e-15;
}

} // namespace swarmlab
