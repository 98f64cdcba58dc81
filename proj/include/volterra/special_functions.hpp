#pragma once

#include "volterra/errors.hpp"

namespace volterra {

/// Arguments of the Gauss hypergeometric function F(a,b;c;z).
/// Supported range: z <= 0 and 0 <= z < 1; c must not be zero or a
/// negative integer.
struct HypergeometricArgs {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double z = 0.0;
};

/// Gauss hypergeometric function F(a,b;c;z) for z <= 0 and 0 <= z < 1.
///
/// For z in [0,1) the defining power series is summed directly with
/// compensated summation. For moderately negative z the Pfaff transform
///     F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1))
/// maps the argument into [0,1). For large negative z the Pfaff series
/// argument approaches 1 and converges too slowly, so the |z|->inf
/// connection formula (two fast series in 1/z) is used instead.
///
/// Relative accuracy target: 1e-10 over the supported range.
/// Throws DomainError for unsupported arguments, ConvergenceError if the
/// series does not settle within the iteration cap.
double gauss_2f1(const HypergeometricArgs& args);

inline double gauss_2f1(double a, double b, double c, double z) {
    return gauss_2f1(HypergeometricArgs{a, b, c, z});
}

/// Natural log of the gamma function for x > 0. Thread-safe.
/// Throws DomainError for x <= 0.
double ln_gamma(double x);

/// Gamma function for x > 0 (exp of ln_gamma).
double gamma_fn(double x);

} // namespace volterra
