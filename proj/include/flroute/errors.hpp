// errors.hpp — Error types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace flroute {

// Invalid parameters, malformed configs, scenario-validation failures.
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime numerical failures. The CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integrator instability (norm growth beyond tolerance at the chosen dt).
struct IntegrationError : NumericalError {
    explicit IntegrationError(const std::string& msg) : NumericalError(msg) {}
};

// Scattering denominator hit a pole (bound-state / resonance condition).
struct SingularPointError : NumericalError {
    explicit SingularPointError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace flroute
