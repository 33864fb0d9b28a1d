#pragma once

#include <stdexcept>
#include <string>

namespace qfp {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested value is infinite (series/integral diverges).
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A caller-side contract was violated (mass mismatch, bad configuration, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Boson density above the critical bound: no admissible C with kC < 1 exists.
class SupercriticalDensity : public std::runtime_error {
public:
    SupercriticalDensity(const std::string& what, double threshold, double k_rho)
        : std::runtime_error(what), threshold_(threshold), k_rho_(k_rho) {}

    /// Largest admissible k*rho for the given dimension and volume.
    double threshold() const noexcept { return threshold_; }
    double k_rho() const noexcept { return k_rho_; }

private:
    double threshold_;
    double k_rho_;
};

/// Time step exceeds the stability contract of the kinetic solver.
class StepSizeError : public std::runtime_error {
public:
    StepSizeError(const std::string& what, double dt, double dt_max)
        : std::runtime_error(what), dt_(dt), dt_max_(dt_max) {}

    double dt() const noexcept { return dt_; }
    double dt_max() const noexcept { return dt_max_; }

private:
    double dt_;
    double dt_max_;
};

/// A distribution left the admissible set 0 <= f, 1 + k f >= 0.
class AdmissibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qfp
