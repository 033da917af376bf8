#ifndef CAUCHYSUM_ANALYTIC_QUADRATURE_HPP
#define CAUCHYSUM_ANALYTIC_QUADRATURE_HPP

#include <functional>

namespace cauchysum::analytic {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

inline constexpr long kDefaultQuadratureBudget = 1'000'000;

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
/// The interval with the largest local error is bisected until the summed
/// error estimate drops below tol or the evaluation budget runs out. On
/// failure the best estimate is returned with converged = false.
QuadratureResult integrate(const Integrand& f, double a, double b, double tol,
                           long max_evaluations = kDefaultQuadratureBudget);

/// integrate(f, 0, 1, tol).
QuadratureResult quadrature(const Integrand& f, double tol,
                            long max_evaluations = kDefaultQuadratureBudget);

}  // namespace cauchysum::analytic

#endif
