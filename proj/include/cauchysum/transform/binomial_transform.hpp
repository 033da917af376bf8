#ifndef CAUCHYSUM_TRANSFORM_BINOMIAL_TRANSFORM_HPP
#define CAUCHYSUM_TRANSFORM_BINOMIAL_TRANSFORM_HPP

#include "cauchysum/exact/big_rational.hpp"

#include <functional>

namespace cauchysum::transform {

inline constexpr double kCancellationLimit = 1e6;

struct BinomialSumResult {
    double value = 0.0;
    double cancellation = 0.0;  // max |C(n,k) f(k)| / |value|
    bool cancellation_flag = false;
};

/// sum_{k=0}^{n} C(n,k) (-1)^k f(k) in floating point, with a cancellation monitor.
BinomialSumResult alternating_binomial_sum(const std::function<double(long)>& f, long n);

/// Exact path for rational-valued f.
BigRational alternating_binomial_sum_exact(const std::function<BigRational(long)>& f, long n);

/// A_k(z) = int_0^1 x^k (1-z)^x dx by the closed logarithmic formula
/// k! (1/L^{k+1} - (1-z) sum_{j<=k} 1/(j! L^{k-j+1})), L = -ln(1-z).
double power_log_moment(double z, int k);

/// int_0^1 C(x,q) (1-z)^x dx = (1/q!) sum_k s(q,k) A_k(z).
double binomial_power_integral(double z, int q);

/// (-1)^q (z/(1-z))^q int_0^1 C(x,q) (1-z)^x dx, the closed form of
/// sum_n (-1)^n c_n/n! C(n,q) z^n. Requires 0 < z < 1.
double binomial_series_closed_form(double z, int q);

/// Same value in the (-z)^q int_0^1 C(x,q) (1-z)^{x-q} dx presentation.
double binomial_series_closed_form_alt(double z, int q);

/// (-1)^q (z/(1-z))^q (1/m!) (d/dx)^m [(1-z)^x C(x,q)] at x = 0, computed as
/// sum_{k<=min(m,q)} s(q,k)/q! * ln(1-z)^{m-k}/(m-k)!.
double stirling_series_closed_form(double z, int q, int m);

}  // namespace cauchysum::transform

#endif
