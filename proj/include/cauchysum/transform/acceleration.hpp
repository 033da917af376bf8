#ifndef CAUCHYSUM_TRANSFORM_ACCELERATION_HPP
#define CAUCHYSUM_TRANSFORM_ACCELERATION_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cauchysum::transform {

// euler is the Cohen-Villegas-Zagier form of the Euler transform for
// alternating series; on a monotone series it runs after the
// van Wijngaarden rearrangement.
enum class AccelMethod { automatic, none, euler, wynn_epsilon, wynn_rho };

std::string to_string(AccelMethod m);
std::optional<AccelMethod> parse_accel_method(std::string_view text);

struct Extrapolation {
    double value = 0.0;
    double error_estimate = 0.0;
    bool singular = false;  // table broke down; value is the last partial sum
};

/// Extrapolates the limit of a list of partial sums (at least 4).
/// none returns the last partial sum with the last increment as error.
/// euler treats the increments as an alternating series.
Extrapolation accelerate(std::span<const double> partials, AccelMethod method);

Extrapolation wynn_epsilon(std::span<const double> partials);
/// Wynn's rho algorithm with interpolation points x_n = n + 1; suited to
/// logarithmically convergent sequences such as partial sums of 1/n^2.
Extrapolation wynn_rho(std::span<const double> partials);

/// sum_{k=0}^{n-1} (-1)^k a_k by the Cohen-Villegas-Zagier weights.
double cvz_alternating(std::span<const double> a);

}  // namespace cauchysum::transform

#endif
