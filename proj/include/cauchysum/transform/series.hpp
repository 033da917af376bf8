#ifndef CAUCHYSUM_TRANSFORM_SERIES_HPP
#define CAUCHYSUM_TRANSFORM_SERIES_HPP

#include "cauchysum/transform/acceleration.hpp"

#include <functional>
#include <optional>
#include <string>

namespace cauchysum::transform {

// Claimed behaviour of the terms; selects the default summation strategy.
//   finite       terms vanish beyond `last`
//   geometric    |t_{n+1}/t_n| tends to a constant below 1
//   alternating  signs alternate, magnitudes smooth
//   monotone     one sign, power-law decay n^{-p} with p > 1
//   logarithmic  one sign, decay with logarithmic factors (Cauchy-class)
//   mixed        none of the above
enum class DecayClass { finite, geometric, alternating, monotone, logarithmic, mixed };

std::string to_string(DecayClass d);

struct TermGenerator {
    // The index is a double so the tail transform can probe n far beyond
    // the range of long. Terms must be finite for every index >= first.
    std::function<double(double)> term;
    DecayClass decay = DecayClass::mixed;
    long first = 0;
    std::optional<long> last;  // required for DecayClass::finite
};

struct SeriesOptions {
    AccelMethod accel = AccelMethod::automatic;
    double tol = 1e-10;
    long max_terms = 200'000;  // raw-summation cap
    long max_window = 400;     // accelerated-window cap
};

struct SeriesResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long terms_used = 0;
    std::string method;
    bool converged = false;
    bool heuristic_tail = false;  // error estimate rests on a tail heuristic
};

struct TailEstimate {
    double bound = 0.0;
    bool heuristic = false;
};

/// Conservative bound on sum_{k > n} t_k used when acceleration is off.
/// The logarithmic class assumes |t_k| ~ C / (k ln^2 k), a heuristic.
TailEstimate tail_estimate(const TermGenerator& terms, long n);

/// sum_{n >= first} terms(n).
SeriesResult sum_series(const TermGenerator& terms, const SeriesOptions& options = {});

/// Same, with summation forced to start no earlier than n = m (s(n,m) = 0 for n < m).
SeriesResult sum_series_from(int m, const TermGenerator& reduced, const SeriesOptions& options = {});

}  // namespace cauchysum::transform

#endif
