#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swarmlab/objective.hpp"
#include "swarmlab/random.hpp"

namespace swarmlab {

/// Box bounds applied uniformly to every dimension.
struct Bounds {
    double lower = -100.0;
    double upper = 100.0;
};

enum class BoundaryPolicy { none, clamp };

struct SwarmConfig {
    int n_particles = 40;
    int n_dims = 30;
    int it_max = 2000;
    double w_max = 0.9;
    double w_min = 0.1;
    double c1 = 1.4962;
    double c2 = 1.4962;
    Bounds bounds{};
    BoundaryPolicy boundary = BoundaryPolicy::none;

    /// Throws ConfigError on lower > upper, w_min > w_max, or non-positive
    /// particle/dimension/iteration counts.
    void validate() const;
};

/// Full per-run state. Matrices are row-major, one row per particle.
///
/// Invariants maintained by init_swarm/update_bests:
///   - personal_best_fit[i] is non-increasing over a run;
///   - global_best_fit <= min(personal_best_fit), with equality unless a
///     global-best-only mutation (EPSOM) has been accepted;
///   - fitness holds the most recent evaluation of positions.
struct SwarmState {
    int n_particles = 0;
    int n_dims = 0;
    std::vector<double> positions;
    std::vector<double> velocities;
    std::vector<double> personal_best_pos;
    std::vector<double> personal_best_fit;
    std::vector<double> fitness;
    std::vector<double> global_best_pos;
    double global_best_fit = 0.0;
    int iteration = 0;  // completed iterations; 0 right after initialization

    std::span<double> position(int i) { return row(positions, i); }
    std::span<const double> position(int i) const { return row(positions, i); }
    std::span<double> velocity(int i) { return row(velocities, i); }
    std::span<const double> velocity(int i) const { return row(velocities, i); }
    std::span<double> personal_best(int i) { return row(personal_best_pos, i); }
    std::span<const double> personal_best(int i) const { return row(personal_best_pos, i); }

private:
    std::span<double> row(std::vector<double>& m, int i) {
        return {m.data() + static_cast<std::size_t>(i) * n_dims, static_cast<std::size_t>(n_dims)};
    }
    std::span<const double> row(const std::vector<double>& m, int i) const {
        return {m.data() + static_cast<std::size_t>(i) * n_dims, static_cast<std::size_t>(n_dims)};
    }
};

enum class UpdateMode { cognitive, social, full };

/// Linearly decaying inertia weight: w_max - it*(w_max - w_min)/it_max.
double inertia_weight(int it, const SwarmConfig& config);

/// Single-coordinate velocity rules. Steppers draw r1/r2 and call these.
double vel_full(double w, double v, double x, double pb, double gb,
                double c1, double c2, double r1, double r2);
double vel_cognitive(double w, double v, double x, double pb, double c1, double r1);
double vel_social(double w, double v, double x, double gb, double c2, double r2);

/// New velocity for one particle; draws per the stream contract (dimensions
/// in index order, r1 before r2, only the draws the mode uses).
void velocity_update(UpdateMode mode, const SwarmState& state, int particle, double w,
                     const SwarmConfig& config, RandomStream& rng, std::span<double> out);
std::vector<double> velocity_update(UpdateMode mode, const SwarmState& state, int particle,
                                    double w, const SwarmConfig& config, RandomStream& rng);

/// x' = x + v'.
std::vector<double> position_update(const SwarmState& state, int particle,
                                    std::span<const double> new_velocity);

/// clamp: clips each coordinate into [lower, upper] and zeroes the velocity
/// component on any clipped coordinate. none: identity.
void apply_boundary(BoundaryPolicy policy, const Bounds& bounds,
                    std::span<double> position, std::span<double> velocity);

/// Evaluates every particle's position into state.fitness.
/// Throws EvaluationError naming particle and iteration on non-finite values.
void evaluate_swarm(SwarmState& state, const ObjectiveFunction& objective);

/// Applies one round of best updates from the given fitness vector.
/// Personal bests replace on strict improvement only; the global best moves
/// iff the new minimum is strictly lower, lowest particle index winning ties.
void update_bests(SwarmState& state, std::span<const double> fitness);

/// Uniform positions in bounds, zero velocities, bests seeded from the
/// initial evaluation, iteration 0.
SwarmState init_swarm(const SwarmConfig& config, const ObjectiveFunction& objective,
                      RandomStream& rng);

} // namespace swarmlab
