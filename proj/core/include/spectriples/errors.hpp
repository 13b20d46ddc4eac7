#pragma once

#include <stdexcept>
#include <string>

namespace spectriples {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate or otherwise unusable torus specification.
struct InvalidSpecError : Error {
    using Error::Error;
};

// Operation outside the supported parameter range (e.g. congruence in dim > 4).
struct UnsupportedError : Error {
    using Error::Error;
};

// A discrete triple-product request would alias: products of the retained
// modes are not resolvable on the grid. Carries the largest safe cutoff.
struct AliasingError : Error {
    AliasingError(const std::string& msg, int max_safe_cutoff_)
        : Error(msg), max_safe_cutoff(max_safe_cutoff_) {}
    int max_safe_cutoff;
};

// Iterative eigensolver failed to reach its tolerance within the iteration
// budget. Carries the residual actually achieved.
struct SolverError : Error {
    SolverError(const std::string& msg, double residual_)
        : Error(msg), residual(residual_) {}
    double residual;
};

// Malformed input file (spec JSON, tensor dump).
struct IoError : Error {
    using Error::Error;
};

}  // namespace spectriples
