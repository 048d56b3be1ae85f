#include "swarmlab/objective.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "swarmlab/errors.hpp"

namespace swarmlab {

namespace {

void require_pairwise(std::span<const double> x) {
    if (x.size() < 2) {
        throw ConfigError("rosenbrock requires at least 2 dimensions, got " +
                          std::to_string(x.size()));
    }
}

} // namespace

double rosenbrock(std::span<const double> x) {
    require_pairwise(x);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rosenbrock_as_printed(std::span<const double> x) {
    require_pairwise(x);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] * x[i + 1] - x[i];
        const double b = 1.0 - x[i];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin(std::span<const double> x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double sum = 0.0;
    for (const double xi : x) {
        sum += xi * xi - 10.0 * std::cos(two_pi * xi) + 10.0;
    }
    return sum;
}

double griewank(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i] / 4000.0;
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum - prod + 1.0;
}

namespace {

constexpr std::array<std::string_view, 4> kNames = {
    "griewank", "rastrigin", "rosenbrock", "rosenbrock-as-printed"};

ObjectiveFunction make(std::string_view name, int n_dims,
                       double (*fn)(std::span<const double>),
                       std::vector<double> optimizer) {
    ObjectiveFunction f;
    f.name = std::string(name);
    f.n_dims = n_dims;
    f.evaluate = [fn](std::span<const double> x) { return fn(x); };
    f.known_optimum_value = 0.0;
    f.known_optimizer = std::move(optimizer);
    return f;
}

} // namespace

std::span<const std::string_view> objective_names() { return kNames; }

ObjectiveFunction lookup(std::string_view name, int n_dims) {
    if (n_dims < 1) {
        throw ConfigError("objective dimension must be >= 1, got " + std::to_string(n_dims));
    }
    if (name == "griewank") {
        return make(name, n_dims, &griewank, std::vector<double>(n_dims, 0.0));
    }
    if (name == "rastrigin") {
        return make(name, n_dims, &rastrigin, std::vector<double>(n_dims, 0.0));
    }
    if (name == "rosenbrock" || name == "rosenbrock-as-printed") {
        if (n_dims < 2) {
            throw ConfigError(std::string(name) + " requires n_dims >= 2, got " +
                              std::to_string(n_dims));
        }
        auto fn = (name == "rosenbrock") ? &rosenbrock : &rosenbrock_as_printed;
        return make(name, n_dims, fn, std::vector<double>(n_dims, 1.0));
    }
    std::string valid;
    for (const auto n : kNames) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw RegistryError("unknown objective '" + std::string(name) + "'; valid names: " + valid);
}

} // namespace swarmlab
