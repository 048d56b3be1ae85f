#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "swarmlab/swarm.hpp"

namespace swarmlab {

enum class VariantKind { ldw, epsom, psom, mpso, tpme };

std::string_view variant_name(VariantKind kind);
VariantKind variant_from_name(std::string_view name);  // throws ConfigError
std::span<const std::string_view> variant_names();

/// Algorithm choice plus its variant-specific parameters.
struct VariantSpec {
    VariantKind kind = VariantKind::ldw;
    double mpso_mu = 0.05;  // mutation factor (mpso)
    double tpme_p = 0.02;   // classification band fraction around the fitness mean
    int tpme_ne = 3;        // completed iterations before elitism activates
    double tpme_a = 0.5;    // relocation multiplier half-width, in (0, 1]

    void validate() const;  // throws ConfigError
};

enum class ClassLabel { good, fair, bad };

/// Fitness-space thresholds for the three-band classification.
/// Ordering invariant (minimization): f_best <= aver2 <= aver <= aver1 <= f_worst.
struct PsomThresholds {
    double aver = 0.0;
    double aver1 = 0.0;
    double aver2 = 0.0;
    double f_best = 0.0;
    double f_worst = 0.0;
};

/// Band classification against the midpoints between the fitness mean and the
/// best/worst values: good iff f <= aver2, bad iff f >= aver1, else fair.
/// All-equal fitness degenerates to everything good.
std::pair<PsomThresholds, std::vector<ClassLabel>>
classify_psom(std::span<const double> fitness);

/// Band of fractional width p around the fitness mean m:
/// good iff f < m - p*|m|, bad iff f > m + p*|m|, fair otherwise.
/// The |m| keeps the band ordered when the mean is negative; all-equal
/// fitness classifies everything fair.
std::vector<ClassLabel> classify_tpme(std::span<const double> fitness, double p);

/// Decaying mutation gate (1 - (i-1)/(it_max-1))^(1/mu) for i in [1, it_max].
/// Throws std::domain_error when it_max < 2.
double mpso_threshold(int i, int it_max, double mu);

/// Relocation multiplier 2*a*eta + (1 - a); range [1-a, 1+a], mean 1.
double elite_mutation_multiplier(double a, double eta);

/// Global-best mutation coordinate gb*(1 + 0.5*eta).
double epsom_mutant_coord(double gb, double eta);

/// Mutated copy of the global best, one eta per dimension in index order.
std::vector<double> mutate_gbest_epsom(std::span<const double> gbest, RandomStream& rng);

/// Gated position offset th*(2*eta - 1)*(upper - lower)/2; magnitude shrinks
/// with the threshold. Identifier recorded in output metadata.
double mpso_offset(double th, double eta, const Bounds& bounds);
inline constexpr std::string_view kMpsoMutationRule = "th-uniform-halfrange";

// Steppers. Each performs one synchronous iteration: move every particle
// (index order) from the bests of the previous evaluation, apply the boundary
// policy, evaluate, update bests, increment the iteration counter.

void step_ldw(SwarmState& state, const SwarmConfig& config,
              const ObjectiveFunction& objective, RandomStream& rng);

/// step_ldw, then a trial mutation of the global best, kept only when its
/// fitness is strictly lower (greedy acceptance).
void step_epsom(SwarmState& state, const SwarmConfig& config,
                const ObjectiveFunction& objective, RandomStream& rng);

/// Per-label update modes: good -> cognitive, bad -> social, fair -> full.
/// Classification runs every iteration; there is no termination criterion.
void step_psom(SwarmState& state, const SwarmConfig& config,
               const ObjectiveFunction& objective, RandomStream& rng);

/// step_psom with injected labels instead of classify_psom; the seam used by
/// reduction tests that force every particle fair.
void step_psom_with_labels(SwarmState& state, const SwarmConfig& config,
                           const ObjectiveFunction& objective,
                           std::span<const ClassLabel> labels, RandomStream& rng);

/// Full update for every particle, then per particle a gate draw against the
/// decaying threshold; particles whose gate fires get a per-dimension
/// position offset bounded by the threshold.
void step_mpso(SwarmState& state, const SwarmConfig& config, const VariantSpec& spec,
               const ObjectiveFunction& objective, RandomStream& rng);

/// Classified update with elitism: good -> cognitive, fair -> full,
/// bad -> social; once spec.tpme_ne iterations have completed, each bad
/// particle's position is additionally overwritten by the best position
/// found so far scaled by one relocation multiplier
/// (elite_mutation_multiplier, one eta per relocated particle). The social
/// velocity just computed is retained, so relocated particles re-disperse on
/// the following iteration instead of freezing at the elite.
void step_tpme(SwarmState& state, const SwarmConfig& config, const VariantSpec& spec,
               const ObjectiveFunction& objective, RandomStream& rng);

/// Dispatch on spec.kind.
void step(SwarmState& state, const SwarmConfig& config, const VariantSpec& spec,
          const ObjectiveFunction& objective, RandomStream& rng);

} // namespace swarmlab
