#include "cauchysum/transform/binomial_transform.hpp"

#include "cauchysum/exact/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cauchysum::transform {

BinomialSumResult alternating_binomial_sum(const std::function<double(long)>& f, long n) {
    if (n < 0) throw std::invalid_argument("alternating_binomial_sum: n must be non-negative");
    BinomialSumResult r;
    double c = 1.0;  // C(n,k)
    double sum = 0.0;
    double peak = 0.0;
    for (long k = 0; k <= n; ++k) {
        const double t = c * f(k);
        peak = std::max(peak, std::abs(t));
        sum += (k % 2 == 0) ? t : -t;
        c = c * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    r.value = sum;
    if (sum != 0.0) {
        r.cancellation = peak / std::abs(sum);
    } else {
        r.cancellation = peak > 0.0 ? HUGE_VAL : 0.0;
    }
    r.cancellation_flag = r.cancellation > kCancellationLimit;
    return r;
}

BigRational alternating_binomial_sum_exact(const std::function<BigRational(long)>& f, long n) {
    if (n < 0) throw std::invalid_argument("alternating_binomial_sum_exact: n must be non-negative");
    BigRational acc(0);
    for (long k = 0; k <= n; ++k) {
        const BigRational t = BigRational(exact::binomial(n, k)) * f(k);
        if (k % 2 == 0) {
            acc += t;
        } else {
            acc -= t;
        }
    }
    return acc;
}

namespace {

void check_z(double z) {
    if (!(z > 0.0 && z < 1.0)) throw std::domain_error("binomial series: z must lie in (0, 1)");
}

}  // namespace

double power_log_moment(double z, int k) {
    check_z(z);
    if (k < 0) throw std::invalid_argument("power_log_moment: k must be non-negative");
    // The closed form equals (1-z) sum_{i>=0} k! L^i / (k+1+i)!, a series of
    // positive terms, so it is summed that way to avoid cancellation.
    const long double L = -std::log1p(-static_cast<long double>(z));
    long double term = 1.0L / (k + 1);
    long double sum = 0.0L;
    for (int i = 0;; ++i) {
        sum += term;
        if (i > L && term < 1e-21L * sum) break;
        term *= L / (k + 2 + i);
    }
    return static_cast<double>((1.0L - z) * sum);
}

double binomial_power_integral(double z, int q) {
    if (q < 0) throw std::invalid_argument("binomial_power_integral: q must be non-negative");
    const auto row = exact::stirling1_row(q);
    long double s = 0.0L;
    for (int k = 0; k <= q; ++k) {
        s += static_cast<long double>(row[static_cast<std::size_t>(k)].get_d()) * power_log_moment(z, k);
    }
    return static_cast<double>(s / exact::factorial(q).get_d());
}

double binomial_series_closed_form(double z, int q) {
    check_z(z);
    const double ratio = z / (1.0 - z);
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(ratio, q) * binomial_power_integral(z, q);
}

double binomial_series_closed_form_alt(double z, int q) {
    check_z(z);
    // (1-z)^{x-q} = (1-z)^x (1-z)^{-q}
    return std::pow(-z, q) * std::pow(1.0 - z, -q) * binomial_power_integral(z, q);
}

double stirling_series_closed_form(double z, int q, int m) {
    if (!(z >= 0.0 && z < 1.0)) throw std::domain_error("stirling_series_closed_form: z must lie in [0, 1)");
    if (q < 0 || m < 0) throw std::invalid_argument("stirling_series_closed_form: q and m must be non-negative");
    const double ell = std::log1p(-z);
    const auto row = exact::stirling1_row(q);
    const double qfact = exact::factorial(q).get_d();
    double s = 0.0;
    for (int k = 0; k <= std::min(m, q); ++k) {
        double pw = 1.0;
        double fact = 1.0;
        for (int i = 1; i <= m - k; ++i) {
            pw *= ell;
            fact *= i;
        }
        s += row[static_cast<std::size_t>(k)].get_d() / qfact * pw / fact;
    }
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(z / (1.0 - z), q) * s;
}

}  // namespace cauchysum::transform
