#include "cauchysum/analytic/special_functions.hpp"
#include "cauchysum/exact/kernel.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

namespace an = cauchysum::analytic;

TEST_CASE("log_gamma against the C library") {
    for (double x = 0.5; x <= 100.0; x += 0.37) CHECK(std::abs(an::log_gamma(x) - std::lgamma(x)) < 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
    CHECK(an::log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(an::log_gamma(0.5) == doctest::Approx(0.5 * std::log(an::kPi)).epsilon(1e-15));
    CHECK_THROWS_AS(an::log_gamma(0.0), an::DomainError);
    CHECK_THROWS_AS(an::log_gamma(-1.5), an::DomainError);
}

TEST_CASE("log_gamma_ratio stays accurate for large arguments") {
    for (double x : {0.7, 3.0, 40.0}) CHECK(an::log_gamma_ratio(x, 2.5) == doctest::Approx(std::lgamma(x + 2.5) - std::lgamma(x)).epsilon(1e-13));
    // ln Gamma(x+1) - ln Gamma(x) = ln x exactly.
    CHECK(an::log_gamma_ratio(1e12, 1.0) == doctest::Approx(std::log(1e12)).epsilon(1e-15));
    CHECK(an::log_gamma_ratio(1e30, 0.5) == doctest::Approx(0.5 * std::log(1e30)).epsilon(1e-14));
}

TEST_CASE("digamma") {
    CHECK(an::digamma(1.0) == doctest::Approx(-an::kEulerGamma).epsilon(1e-15));
    CHECK(an::digamma(0.5) == doctest::Approx(-an::kEulerGamma - 2.0 * an::kLn2).epsilon(1e-15));
    for (double x = 0.5; x < 60.0; x += 0.91) CHECK(std::abs(an::digamma(x + 1.0) - an::digamma(x) - 1.0 / x) < 1e-14);
    CHECK_THROWS_AS(an::digamma(0.0), an::DomainError);
}

TEST_CASE("zeta at integers") {
    CHECK(an::zeta_int(2) == doctest::Approx(an::kPi * an::kPi / 6.0).epsilon(1e-15));
    CHECK(an::zeta_int(3) == doctest::Approx(1.2020569031595942854).epsilon(1e-15));
    CHECK(an::zeta_int(4) == doctest::Approx(std::pow(an::kPi, 4) / 90.0).epsilon(1e-15));
    CHECK(an::zeta_int(40) == doctest::Approx(1.0 + std::pow(2.0, -40)).epsilon(1e-15));
    CHECK_THROWS_AS(an::zeta_int(1), an::DomainError);
}

TEST_CASE("Ein against its power series") {
    for (double z : {-5.0, -1.0, -an::kLn2, 0.0, 0.3, 2.0, 7.5}) CHECK(an::ein(z) == doctest::Approx(oracle::ein(z)).epsilon(1e-14));
    // Ein(z) = gamma + ln z + E1(z) for z > 0; E1(1) = 0.21938393439552027.
    CHECK(an::ein(1.0) == doctest::Approx(an::kEulerGamma + 0.21938393439552027368).epsilon(1e-15));
    CHECK(std::isnan(an::ein(60.0)));
}

TEST_CASE("central binomial and real binomial") {
    for (long n = 0; n <= 30; ++n) {
        const cauchysum::BigRational exact(oracle::binomial(2 * n, n), cauchysum::BigInt(1) << (2 * n));
        CHECK(an::central_binomial_real(static_cast<double>(n)) == doctest::Approx(exact.to_double()).epsilon(1e-14));
    }
    CHECK(an::central_binomial_real(0.5) == doctest::Approx(2.0 / an::kPi).epsilon(1e-15));
    CHECK_THROWS_AS(an::central_binomial_real(-0.5), an::DomainError);
    CHECK(an::binom_real(5.0, 2) == doctest::Approx(10.0));
    CHECK(an::binom_real(0.5, 3) == doctest::Approx(0.0625));
    CHECK(an::binom_real(7.25, 0) == 1.0);
}

TEST_CASE("harmonic_real at small and huge n") {
    for (long n = 0; n <= 60; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(an::harmonic_real(static_cast<double>(n), m) == doctest::Approx(oracle::harmonic(n, m).to_double()).epsilon(1e-15));
    const double big = 1e20;
    CHECK(an::harmonic_real(big) == doctest::Approx(std::log(big) + an::kEulerGamma).epsilon(1e-15));
    CHECK(an::harmonic_real(big, 2) == doctest::Approx(an::zeta_int(2) - 1.0 / big).epsilon(1e-15));
    CHECK_THROWS_AS(an::harmonic_real(-1.0), an::DomainError);
    CHECK_THROWS_AS(an::harmonic_real(3.0, 0), an::DomainError);
}

TEST_CASE("alternating tail") {
    CHECK(an::alternating_tail(1.0) == doctest::Approx(an::kLn2).epsilon(1e-15));
    for (long n = 0; n <= 30; ++n) {
        const double skew = cauchysum::exact::skew_harmonic(n).to_double();
        const double expected = (n % 2 == 0 ? 1.0 : -1.0) * an::alternating_tail(static_cast<double>(n) + 1.0);
        CHECK(an::kLn2 - skew == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(an::alternating_tail(1e9) == doctest::Approx(0.5e-9).epsilon(1e-8));
}
