#ifndef CAUCHYSUM_TRANSFORM_REAL_SEQUENCES_HPP
#define CAUCHYSUM_TRANSFORM_REAL_SEQUENCES_HPP

// Floating evaluations of the special-number families at an index held in a
// double. Indices may be far beyond 2^53 (the Euler-van Wijngaarden tail
// probes n ~ 2^100); every function stays accurate there.

namespace cauchysum::transform {

/// Largest index for which Cauchy weights are taken from exact rationals.
inline constexpr long kExactCauchyLimit = 400;

/// |c_n| / n!. Exact rationals up to kExactCauchyLimit, then the integral
///   |G_n| = 1/(n-1) * int_0^inf e^{-v} / (pi^2 + ln^2(e^{v/(n-1)} - 1)) dv
/// evaluated by the trapezoid rule in ln v (relative error below 1e-15).
double cauchy_abs_ratio(double n);

/// (-1)^n c_n / n!: 1 at n = 0 and -|c_n|/n! for n >= 1.
double signed_cauchy_weight(double n);

/// (-1)^{n-m} s(n,m) / n! = |s(n,m)| / n!.
double stirling_weight(double n, int m);

/// C(2n,n) / 4^n.
double central_binomial_over_4n(double n);

/// h_n^{(r)} = C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}).
double hyperharmonic_real(double n, int r);

/// H_{n+a}^{(m)} - H_{b}^{(m)} for b <= n + a, without cancellation at large n.
double harmonic_difference(double n, int a, int b, int m = 1);

/// H^-_n - ln 2 = (-1)^{n+1} beta(n+1), n a non-negative integer below 2^53.
double skew_harmonic_gap(long n);

}  // namespace cauchysum::transform

#endif
