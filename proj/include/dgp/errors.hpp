#pragma once

#include <stdexcept>
#include <string>

namespace dgp {

// Domain violation in scalar or special-function arithmetic (log of a
// nonpositive number, division by zero, argument on a branch cut, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Two high-precision values with different working precisions were combined.
struct precision_mismatch : std::runtime_error {
    explicit precision_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// A series operation hit a singular input (reciprocal/log of a series with
// zero constant term, ring mismatch, ...).
struct singular_series : std::runtime_error {
    explicit singular_series(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature or iterative scheme did not reach the requested tolerance.
// Carries the tolerance that was actually achieved.
struct convergence_error : std::runtime_error {
    double achieved;
    convergence_error(const std::string& what, double achieved_tol)
        : std::runtime_error(what), achieved(achieved_tol) {}
};

} // namespace dgp
