#pragma once

#include <stdexcept>
#include <string>

namespace volterra {

/// Argument outside the explicitly supported range of an operation.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A series or iteration failed to reach its tolerance within the cap.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Estimated quadrature error exceeded the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Covariance factorization failed even after diagonal jitter.
class NotPositiveDefiniteError : public std::runtime_error {
public:
    explicit NotPositiveDefiniteError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation requires a drift with a finite sup bound.
class UnboundedDriftError : public std::invalid_argument {
public:
    explicit UnboundedDriftError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Estimator received fewer samples than it needs.
class InsufficientSamplesError : public std::invalid_argument {
public:
    explicit InsufficientSamplesError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Paired ensembles do not share seeds or grids.
class MismatchedEnsemblesError : public std::invalid_argument {
public:
    explicit MismatchedEnsemblesError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Filesystem failure while emitting run outputs.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace volterra
