#include "cauchysum/analytic/power_series.hpp"
#include "cauchysum/analytic/quadrature.hpp"
#include "cauchysum/analytic/special_functions.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

namespace an = cauchysum::analytic;

TEST_CASE("digamma(n+1) + gamma = H_n, n <= 20") {
    for (long n = 0; n <= 20; ++n) CHECK(std::abs(an::digamma(n + 1.0) + an::kEulerGamma - oracle::harmonic(n).to_double()) < 1e-12);
}

TEST_CASE("log_gamma recurrence and duplication") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.5, 80.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        CHECK(std::abs(an::log_gamma(x + 1.0) - an::log_gamma(x) - std::log(x)) < 1e-13 * std::max(1.0, an::log_gamma(x + 1.0)));
        const double dup = (2.0 * x - 1.0) * an::kLn2 + an::log_gamma(x) + an::log_gamma(x + 0.5) - 0.5 * std::log(an::kPi);
        CHECK(std::abs(an::log_gamma(2.0 * x) - dup) < 1e-12 * std::max(1.0, std::abs(dup)));
        CHECK(an::central_binomial_real(x + 1.0) == doctest::Approx(an::central_binomial_real(x) * (2.0 * x + 1.0) / (2.0 * x + 2.0)).epsilon(1e-13));
    }
}

TEST_CASE("quadrature error estimates bound the true error") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.2, 4.0);
    for (int i = 0; i < 50; ++i) {
        const double a = u(rng), b = u(rng);
        // int_0^1 x^{a-1} e^{b x} dx has a weak endpoint singularity for a < 1.
        const auto f = [a, b](double x) { return std::pow(x, a - 1.0) * std::exp(b * x); };
        long double exact = 0.0L, term = 1.0L;
        for (int k = 0; k < 80; ++k) {
            if (k > 0) term *= static_cast<long double>(b) / k;
            exact += term / (a + k);
        }
        const auto r = an::quadrature(f, 1e-10);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(r.converged);
        CHECK(std::abs(r.value - static_cast<double>(exact)) <= r.error_estimate + 1e-14);
    }
}

TEST_CASE("power series products commute and associate") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const int order = 8;
        an::PowerSeries a(order), b(order), c(order);
        for (int k = 0; k <= order; ++k) {
            a[k] = u(rng);
            b[k] = u(rng);
            c[k] = u(rng);
        }
        const auto ab = an::ps_mul(a, b), ba = an::ps_mul(b, a);
        const auto left = an::ps_mul(ab, c), right = an::ps_mul(a, an::ps_mul(b, c));
        for (int k = 0; k <= order; ++k) {
            CHECK(ab[k] == doctest::Approx(ba[k]).epsilon(1e-14));
            CHECK(left[k] == doctest::Approx(right[k]).epsilon(1e-12));
        }
        // exp(a0 + a1) = exp(a0) exp(a1) for series without constant term.
        a[0] = 0.0;
        b[0] = 0.0;
        const auto lhs = an::ps_exp(an::ps_add(a, b)), rhs = an::ps_mul(an::ps_exp(a), an::ps_exp(b));
        for (int k = 0; k <= order; ++k) CHECK(lhs[k] == doctest::Approx(rhs[k]).epsilon(1e-12));
    }
}

TEST_CASE("central binomial Taylor coefficients match numerical differentiation, order <= 5") {
    const auto f = [](long double x) {
        return std::exp(std::lgamma(2.0L * x + 1.0L) - 2.0L * std::lgamma(x + 1.0L) - 2.0L * x * std::log(2.0L));
    };
    const auto numeric = oracle::taylor_by_chebyshev(f, 0.25L, 26, 5);
    const auto series = an::ps_central_binomial(5);
    for (int k = 0; k <= 5; ++k) {
        CAPTURE(k);
        CHECK(std::abs(series[k] - static_cast<double>(numeric[static_cast<std::size_t>(k)])) < 1e-6);
    }
}

TEST_CASE("exp of the ln Gamma series matches numerical Gamma coefficients") {
    const auto numeric = oracle::taylor_by_chebyshev([](long double x) { return std::tgamma(1.0L + x); }, 0.4L, 26, 6);
    const auto series = an::ps_exp(an::ps_loggamma_shifted(6));
    for (int k = 0; k <= 6; ++k) CHECK(std::abs(series[k] - static_cast<double>(numeric[static_cast<std::size_t>(k)])) < 1e-8);
}
