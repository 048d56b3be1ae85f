#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swarmlab {

/// Named n-dimensional objective with known optimum, minimization convention.
struct ObjectiveFunction {
    std::string name;
    int n_dims = 0;
    std::function<double(std::span<const double>)> evaluate;
    double known_optimum_value = 0.0;
    std::vector<double> known_optimizer;
};

/// Sum of 100*(x[i+1] - x[i]^2)^2 + (1 - x[i])^2; minimum 0 at all-ones.
/// Requires n >= 2.
double rosenbrock(std::span<const double> x);

/// Variant with the squared term on the leading coordinate:
/// 100*(x[i+1]^2 - x[i])^2 + (1 - x[i])^2. Also 0 at all-ones. Requires n >= 2.
double rosenbrock_as_printed(std::span<const double> x);

/// Sum of x[i]^2 - 10*cos(2*pi*x[i]) + 10; minimum 0 at the origin.
double rastrigin(std::span<const double> x);

/// Sum of x[i]^2/4000 minus the product of cos(x[i]/sqrt(i+1)), plus 1;
/// minimum 0 at the origin.
double griewank(std::span<const double> x);

/// Registry names accepted by lookup() and the CLI.
std::span<const std::string_view> objective_names();

/// Build a configured objective by registry name.
/// Throws RegistryError for unknown names (message lists valid ones) and
/// ConfigError when n_dims violates the function's domain.
ObjectiveFunction lookup(std::string_view name, int n_dims);

} // namespace swarmlab
