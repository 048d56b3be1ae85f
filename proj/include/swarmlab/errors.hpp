#pragma once

#include <stdexcept>
#include <string>

namespace swarmlab {

/// Invalid SwarmConfig / VariantSpec / ExperimentSpec parameters.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Unknown objective name requested from the registry.
class RegistryError : public std::runtime_error {
public:
    explicit RegistryError(const std::string& what) : std::runtime_error(what) {}
};

/// An objective produced a non-finite value; aborts the run.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, int particle, int iteration)
        : std::runtime_error(what), particle(particle), iteration(iteration) {}
    int particle;
    int iteration;
};

/// Inconsistent inputs to an aggregate operation (e.g. compare_variants).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// File output failure; message carries the path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace swarmlab
