#include "swarmlab/swarm.hpp"

#include <algorithm>
#include <cmath>

#include "swarmlab/errors.hpp"

namespace swarmlab {

void SwarmConfig::validate() const {
    if (n_particles < 1) throw ConfigError("n_particles must be >= 1");
    if (n_dims < 1) throw ConfigError("n_dims must be >= 1");
    // it_max == 0 is allowed so a degenerate zero-step run can still record
    // its post-initialization best.
    if (it_max < 0) throw ConfigError("it_max must be >= 0");
    if (w_min > w_max) throw ConfigError("w_min must be <= w_max");
    if (bounds.lower > bounds.upper) throw ConfigError("bounds.lower must be <= bounds.upper");
}

double inertia_weight(int it, const SwarmConfig& config) {
    return config.w_max - it * (config.w_max - config.w_min) / config.it_max;
}

double vel_full(double w, double v, double x, double pb, double gb,
                double c1, double c2, double r1, double r2) {
    return w * v + c1 * r1 * (pb - x) + c2 * r2 * (gb - x);
}

double vel_cognitive(double w, double v, double x, double pb, double c1, double r1) {
    return w * v + c1 * r1 * (pb - x);
}

double vel_social(double w, double v, double x, double gb, double c2, double r2) {
    return w * v + c2 * r2 * (gb - x);
}

void velocity_update(UpdateMode mode, const SwarmState& state, int particle, double w,
                     const SwarmConfig& config, RandomStream& rng, std::span<double> out) {
    const auto x = state.position(particle);
    const auto v = state.velocity(particle);
    const auto pb = state.personal_best(particle);
    const auto& gb = state.global_best_pos;
    for (int j = 0; j < state.n_dims; ++j) {
        switch (mode) {
        case UpdateMode::full: {
            const double r1 = rng.next_unit();
            const double r2 = rng.next_unit();
            out[j] = vel_full(w, v[j], x[j], pb[j], gb[j], config.c1, config.c2, r1, r2);
            break;
        }
        case UpdateMode::cognitive:
            out[j] = vel_cognitive(w, v[j], x[j], pb[j], config.c1, rng.next_unit());
            break;
        case UpdateMode::social:
            out[j] = vel_social(w, v[j], x[j], gb[j], config.c2, rng.next_unit());
            break;
        }
    }
}

std::vector<double> velocity_update(UpdateMode mode, const SwarmState& state, int particle,
                                    double w, const SwarmConfig& config, RandomStream& rng) {
    std::vector<double> out(static_cast<std::size_t>(state.n_dims));
    velocity_update(mode, state, particle, w, config, rng, out);
    return out;
}

std::vector<double> position_update(const SwarmState& state, int particle,
                                    std::span<const double> new_velocity) {
    const auto x = state.position(particle);
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += new_velocity[j];
    return out;
}

void apply_boundary(BoundaryPolicy policy, const Bounds& bounds,
                    std::span<double> position, std::span<double> velocity) {
    if (policy == BoundaryPolicy::none) return;
    for (std::size_t j = 0; j < position.size(); ++j) {
        if (position[j] < bounds.lower) {
            position[j] = bounds.lower;
            velocity[j] = 0.0;
        } else if (position[j] > bounds.upper) {
            position[j] = bounds.upper;
            velocity[j] = 0.0;
        }
    }
}

void evaluate_swarm(SwarmState& state, const ObjectiveFunction& objective) {
    for (int i = 0; i < state.n_particles; ++i) {
        const double f = objective.evaluate(state.position(i));
        if (!std::isfinite(f)) {
            throw EvaluationError("non-finite fitness from objective '" + objective.name +
                                      "' for particle " + std::to_string(i) + " at iteration " +
                                      std::to_string(state.iteration),
                                  i, state.iteration);
        }
        state.fitness[static_cast<std::size_t>(i)] = f;
    }
}

void update_bests(SwarmState& state, std::span<const double> fitness) {
    for (int i = 0; i < state.n_particles; ++i) {
        const double f = fitness[static_cast<std::size_t>(i)];
        if (!std::isfinite(f)) {
            throw EvaluationError("non-finite fitness for particle " + std::to_string(i) +
                                      " at iteration " + std::to_string(state.iteration),
                                  i, state.iteration);
        }
        if (f < state.personal_best_fit[static_cast<std::size_t>(i)]) {
            state.personal_best_fit[static_cast<std::size_t>(i)] = f;
            const auto x = state.position(i);
            std::copy(x.begin(), x.end(), state.personal_best(i).begin());
        }
    }
    // Lowest index wins among tied new minima; incumbent wins ties overall.
    int best = 0;
    for (int i = 1; i < state.n_particles; ++i) {
        if (fitness[static_cast<std::size_t>(i)] < fitness[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    if (fitness[static_cast<std::size_t>(best)] < state.global_best_fit) {
        state.global_best_fit = fitness[static_cast<std::size_t>(best)];
        const auto x = state.position(best);
        state.global_best_pos.assign(x.begin(), x.end());
    }
    if (fitness.data() != state.fitness.data()) {
        state.fitness.assign(fitness.begin(), fitness.end());
    }
}

SwarmState init_swarm(const SwarmConfig& config, const ObjectiveFunction& objective,
                      RandomStream& rng) {
    config.validate();
    if (objective.n_dims != config.n_dims) {
        throw ConfigError("objective dimension " + std::to_string(objective.n_dims) +
                          " does not match config n_dims " + std::to_string(config.n_dims));
    }
    SwarmState state;
    state.n_particles = config.n_particles;
    state.n_dims = config.n_dims;
    const auto size = static_cast<std::size_t>(config.n_particles) * config.n_dims;
    state.positions.resize(size);
    state.velocities.assign(size, 0.0);
    state.fitness.resize(static_cast<std::size_t>(config.n_particles));
    for (double& coord : state.positions) {
        coord = rng.next_in(config.bounds.lower, config.bounds.upper);
    }
    evaluate_swarm(state, objective);
    state.personal_best_pos = state.positions;
    state.personal_best_fit = state.fitness;
    int best = 0;
    for (int i = 1; i < state.n_particles; ++i) {
        if (state.fitness[static_cast<std::size_t>(i)] <
            state.fitness[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    const auto x = state.position(best);
    state.global_best_pos.assign(x.begin(), x.end());
    state.global_best_fit = state.fitness[static_cast<std::size_t>(best)];
    state.iteration = 0;
    return state;
}

} // namespace swarmlab
