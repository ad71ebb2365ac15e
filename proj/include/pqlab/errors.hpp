// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pqlab {

/// Sampled value outside the numeric domain (NaN/Inf where finite required).
struct NumericDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An iterative solver stopped before reaching its tolerance.
struct ConvergenceFailure : std::runtime_error {
    ConvergenceFailure(const std::string& what, double best, double tol)
        : std::runtime_error(what), best_residual(best), tolerance(tol) {}
    double best_residual;
    double tolerance;
};

/// A subspace basis whose pairing matrix violates the biorthogonality pattern.
struct InvalidBasis : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Declared nonlinearity limits disagree with their sampled estimates.
struct SpecInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Resonant coefficient without the compensating divergence condition.
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pqlab
