#ifndef RADIALEP_ERRORS_HPP
#define RADIALEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace radialep {

/// Adaptive quadrature failed to reach the requested tolerance; carries the
/// best estimate obtained so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error)
        : std::runtime_error(what), estimate_(estimate), error_(error) {}
    double estimate() const { return estimate_; }
    double error() const { return error_; }

private:
    double estimate_;
    double error_;
};

/// Initial data violates a consistency requirement (negative density,
/// non-constant normalized energy where constancy is required, ...).
class InconsistentDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator could not produce valid initial data; carries the first
/// radius at which the construction failed.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, double radius)
        : std::runtime_error(what), radius_(radius) {}
    double radius() const { return radius_; }

private:
    double radius_;
};

/// ODE integration could not be continued (non-finite state, no progress).
class IntegratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Orbit degenerate to the equilibrium point: no turning points exist.
class DegenerateOrbitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace radialep

#endif
