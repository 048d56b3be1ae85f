#pragma once

#include <cstdint>
#include <random>

namespace swarmlab {

/// Seeded uniform random stream backing all stochastic updates.
///
/// The same seed always reproduces the same draw sequence, independent of
/// platform: draws are built from raw mt19937_64 output (53 mantissa bits),
/// not from distribution adapters whose rounding is implementation-defined.
///
/// Draw-order contract (what makes runs bit-reproducible and lets reduction
/// tests align two algorithms on one stream):
///   - initialization: particles in index order, dimensions in index order,
///     one draw per coordinate;
///   - per iteration: particles in index order; per particle, dimensions in
///     index order with r1 before r2 where both are used (full update draws
///     r1,r2; cognitive-only draws r1; social-only draws r2);
///   - PSO-TPME's single relocation multiplier draw follows that particle's
///     velocity draws;
///   - M-PSO's mutation pass runs after all particles have moved: per
///     particle one gate draw, then per-dimension offset draws when it fires;
///   - global-best mutation draws (EPSOM) come last in the iteration,
///     dimensions in index order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi); degenerate lo == hi yields exactly lo.
    double next_in(double lo, double hi) {
        return lo + next_unit() * (hi - lo);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace swarmlab
