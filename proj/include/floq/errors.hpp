#pragma once

#include <stdexcept>
#include <string>

namespace floq {

// Basis or enumeration guard exceeded (2^L, binomial dimension, free-spin count).
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Split-step propagator failed to converge.
struct integrator_error : std::runtime_error {
    explicit integrator_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input matrix violates the symmetric-unitary structure.
struct symmetry_error : std::runtime_error {
    explicit symmetry_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Eigensolver or other dense linear algebra failure.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Circuit-to-Ising mapping produced an inconsistent graph.
struct mapping_error : std::runtime_error {
    explicit mapping_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad experiment configuration.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Density evaluated outside its support.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace floq
