#include "swarmlab/variants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "swarmlab/errors.hpp"

namespace swarmlab {

namespace {

constexpr std::array<std::string_view, 5> kVariantNames = {
    "ldw", "epsom", "psom", "mpso", "tpme"};

UpdateMode mode_for(ClassLabel label) {
    switch (label) {
    case ClassLabel::good: return UpdateMode::cognitive;
    case ClassLabel::bad: return UpdateMode::social;
    case ClassLabel::fair: break;
    }
    return UpdateMode::full;
}

/// Movement phase shared by the classification variants. When spec is given
/// and enough iterations have completed, bad particles are relocated onto a
/// scaled copy of the best position found so far.
void move_classified(SwarmState& state, const SwarmConfig& config,
                     std::span<const ClassLabel> labels, RandomStream& rng,
                     const VariantSpec* spec) {
    const double w = inertia_weight(state.iteration, config);
    std::vector<double> elite;
    const bool relocate = spec != nullptr && state.iteration >= spec->tpme_ne;
    if (relocate) {
        elite = state.global_best_pos;
    }
    for (int i = 0; i < state.n_particles; ++i) {
        auto v = state.velocity(i);
        auto x = state.position(i);
        velocity_update(mode_for(labels[static_cast<std::size_t>(i)]), state, i, w, config,
                        rng, v);
        if (relocate && labels[static_cast<std::size_t>(i)] == ClassLabel::bad) {
            const double mult = elite_mutation_multiplier(spec->tpme_a, rng.next_unit());
            for (int j = 0; j < state.n_dims; ++j) {
                x[static_cast<std::size_t>(j)] = elite[static_cast<std::size_t>(j)] * mult;
            }
        } else {
            for (int j = 0; j < state.n_dims; ++j) {
                x[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j)];
            }
        }
        apply_boundary(config.boundary, config.bounds, x, v);
    }
}

void finish_step(SwarmState& state, const ObjectiveFunction& objective) {
    evaluate_swarm(state, objective);
    update_bests(state, state.fitness);
    ++state.iteration;
}

} // namespace

std::string_view variant_name(VariantKind kind) {
    return kVariantNames[static_cast<std::size_t>(kind)];
}

VariantKind variant_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
        if (kVariantNames[i] == name) return static_cast<VariantKind>(i);
    }
    std::string valid;
    for (const auto n : kVariantNames) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw ConfigError("unknown variant '" + std::string(name) + "'; valid names: " + valid);
}

std::span<const std::string_view> variant_names() { return kVariantNames; }

void VariantSpec::validate() const {
    if (mpso_mu <= 0.0) throw ConfigError("mpso mu must be > 0");
    if (tpme_p <= 0.0) throw ConfigError("tpme p must be > 0");
    if (tpme_ne < 1) throw ConfigError("tpme ne must be >= 1");
    if (tpme_a <= 0.0 || tpme_a > 1.0) throw ConfigError("tpme a must be in (0, 1]");
}

std::pair<PsomThresholds, std::vector<ClassLabel>>
classify_psom(std::span<const double> fitness) {
    if (fitness.empty()) throw ConfigError("classification requires a nonempty swarm");
    PsomThresholds t;
    double sum = 0.0;
    t.f_best = fitness[0];
    t.f_worst = fitness[0];
    for (const double f : fitness) {
        sum += f;
        t.f_best = std::min(t.f_best, f);
        t.f_worst = std::max(t.f_worst, f);
    }
    t.aver = sum / static_cast<double>(fitness.size());
    t.aver2 = 0.5 * (t.f_best + t.aver);
    t.aver1 = 0.5 * (t.f_worst + t.aver);
    std::vector<ClassLabel> labels(fitness.size());
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        if (fitness[i] <= t.aver2) {
            labels[i] = ClassLabel::good;
        } else if (fitness[i] >= t.aver1) {
            labels[i] = ClassLabel::bad;
        } else {
            labels[i] = ClassLabel::fair;
        }
    }
    return {t, std::move(labels)};
}

std::vector<ClassLabel> classify_tpme(std::span<const double> fitness, double p) {
    if (fitness.empty()) throw ConfigError("classification requires a nonempty swarm");
    double sum = 0.0;
    for (const double f : fitness) sum += f;
    const double m = sum / static_cast<double>(fitness.size());
    const double half_band = p * std::abs(m);
    std::vector<ClassLabel> labels(fitness.size());
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        if (fitness[i] < m - half_band) {
            labels[i] = ClassLabel::good;
        } else if (fitness[i] > m + half_band) {
            labels[i] = ClassLabel::bad;
        } else {
            labels[i] = ClassLabel::fair;
        }
    }
    return labels;
}

double mpso_threshold(int i, int it_max, double mu) {
    if (it_max < 2) {
        throw std::domain_error("mpso threshold is undefined for it_max < 2");
    }
    if (mu <= 0.0) {
        throw std::domain_error("mpso threshold requires mu > 0");
    }
    const double base = 1.0 - static_cast<double>(i - 1) / static_cast<double>(it_max - 1);
    return std::pow(base, 1.0 / mu);
}

double elite_mutation_multiplier(double a, double eta) {
    return 2.0 * a * eta + (1.0 - a);
}

double epsom_mutant_coord(double gb, double eta) {
    return gb * (1.0 + 0.5 * eta);
}

std::vector<double> mutate_gbest_epsom(std::span<const double> gbest, RandomStream& rng) {
    std::vector<double> out(gbest.size());
    for (std::size_t j = 0; j < gbest.size(); ++j) {
        out[j] = epsom_mutant_coord(gbest[j], rng.next_unit());
    }
    return out;
}

double mpso_offset(double th, double eta, const Bounds& bounds) {
    return th * (2.0 * eta - 1.0) * (bounds.upper - bounds.lower) / 2.0;
}

void step_ldw(SwarmState& state, const SwarmConfig& config,
              const ObjectiveFunction& objective, RandomStream& rng) {
    const double w = inertia_weight(state.iteration, config);
    for (int i = 0; i < state.n_particles; ++i) {
        auto v = state.velocity(i);
        auto x = state.position(i);
        velocity_update(UpdateMode::full, state, i, w, config, rng, v);
        for (int j = 0; j < state.n_dims; ++j) {
            x[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j)];
        }
        apply_boundary(config.boundary, config.bounds, x, v);
    }
    finish_step(state, objective);
}

void step_epsom(SwarmState& state, const SwarmConfig& config,
                const ObjectiveFunction& objective, RandomStream& rng) {
    step_ldw(state, config, objective, rng);
    const std::vector<double> mutant = mutate_gbest_epsom(state.global_best_pos, rng);
    const double f = objective.evaluate(mutant);
    // Greedy acceptance; NaN compares false and is rejected with everything
    // else that fails to improve.
    if (f < state.global_best_fit) {
        state.global_best_pos = mutant;
        state.global_best_fit = f;
    }
}

void step_psom(SwarmState& state, const SwarmConfig& config,
               const ObjectiveFunction& objective, RandomStream& rng) {
    const auto labels = classify_psom(state.fitness).second;
    step_psom_with_labels(state, config, objective, labels, rng);
}

void step_psom_with_labels(SwarmState& state, const SwarmConfig& config,
                           const ObjectiveFunction& objective,
                           std::span<const ClassLabel> labels, RandomStream& rng) {
    if (static_cast<int>(labels.size()) != state.n_particles) {
        throw ConfigError("label vector size does not match swarm size");
    }
    move_classified(state, config, labels, rng, nullptr);
    finish_step(state, objective);
}

void step_mpso(SwarmState& state, const SwarmConfig& config, const VariantSpec& spec,
               const ObjectiveFunction& objective, RandomStream& rng) {
    const double w = inertia_weight(state.iteration, config);
    const double th = mpso_threshold(state.iteration + 1, config.it_max, spec.mpso_mu);
    for (int i = 0; i < state.n_particles; ++i) {
        auto v = state.velocity(i);
        auto x = state.position(i);
        velocity_update(UpdateMode::full, state, i, w, config, rng, v);
        for (int j = 0; j < state.n_dims; ++j) {
            x[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j)];
        }
        apply_boundary(config.boundary, config.bounds, x, v);
    }
    // Mutation runs as its own pass so the movement phase consumes the same
    // draw sequence as the base stepper.
    for (int i = 0; i < state.n_particles; ++i) {
        if (rng.next_unit() < th) {
            auto v = state.velocity(i);
            auto x = state.position(i);
            for (int j = 0; j < state.n_dims; ++j) {
                x[static_cast<std::size_t>(j)] += mpso_offset(th, rng.next_unit(), config.bounds);
            }
            apply_boundary(config.boundary, config.bounds, x, v);
        }
    }
    finish_step(state, objective);
}

void step_tpme(SwarmState& state, const SwarmConfig& config, const VariantSpec& spec,
               const ObjectiveFunction& objective, RandomStream& rng) {
    const auto labels = classify_tpme(state.fitness, spec.tpme_p);
    move_classified(state, config, labels, rng, &spec);
    finish_step(state, objective);
}

void step(SwarmState& state, const SwarmConfig& config, const VariantSpec& spec,
          const ObjectiveFunction& objective, RandomStream& rng) {
    switch (spec.kind) {
    case VariantKind::ldw: step_ldw(state, config, objective, rng); break;
    case VariantKind::epsom: step_epsom(state, config, objective, rng); break;
    case VariantKind::psom: step_psom(state, config, objective, rng); break;
    case VariantKind::mpso: step_mpso(state, config, spec, objective, rng); break;
    case VariantKind::tpme: step_tpme(state, config, spec, objective, rng); break;
    }
}

} // namespace swarmlab
