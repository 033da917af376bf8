#ifndef CAUCHYSUM_ANALYTIC_SPECIAL_FUNCTIONS_HPP
#define CAUCHYSUM_ANALYTIC_SPECIAL_FUNCTIONS_HPP

#include <stdexcept>

// Double-precision special functions. Accuracy targets (checked in tests):
//   log_gamma, log_gamma_ratio   ~1e-15 absolute on x in [0.5, 100]
//   digamma                      ~1e-15 absolute for x >= 0.5
//   zeta_int                     full double precision
//   ein                          ~1e-15 relative for |z| <= 50, NaN beyond
//   harmonic_real                ~1e-15 relative for all n (huge n included)

namespace cauchysum::analytic {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// ln Gamma(x), x > 0.
double log_gamma(double x);

/// ln Gamma(x + a) - ln Gamma(x) without cancellation for large x.
/// Requires x > 0 and x + a > 0.
double log_gamma_ratio(double x, double a);

/// psi(x), x > 0.
double digamma(double x);

/// Riemann zeta at an integer k >= 2.
double zeta_int(int k);

/// Entire exponential integral Ein(z) = sum_{n>=1} (-1)^{n-1} z^n / (n! n).
/// Returns NaN for |z| > 50.
double ein(double z);

/// Gamma(2x+1) / (Gamma(x+1)^2 4^x); the central binomial C(2x,x)/4^x.
/// Defined for x > -1/2.
double central_binomial_real(double x);

/// x (x-1) ... (x-q+1) / q!.
double binom_real(double x, int q);

/// Generalized harmonic number H_n^{(m)} for a non-negative integer n held
/// in a double (n may exceed 2^53). Small n are summed directly; large n use
/// the Euler-Maclaurin expansion of the tail.
double harmonic_real(double n, int m = 1);

/// Dirichlet-type alternating tail beta(x) = sum_{k>=0} (-1)^k / (x + k), x > 0.
/// ln 2 - H^-_n = (-1)^n beta(n + 1).
double alternating_tail(double x);

}  // namespace cauchysum::analytic

#endif
