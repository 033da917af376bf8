#include "cauchysum/analytic/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

namespace an = cauchysum::analytic;

TEST_CASE("polynomials of degree up to 10 integrate exactly") {
    for (int d = 0; d <= 10; ++d) {
        const auto r = an::quadrature([d](double x) { return std::pow(x, d); }, 1e-12);
        CHECK(r.converged);
        CHECK(r.value == doctest::Approx(1.0 / (d + 1)).epsilon(1e-15));
        CHECK(r.evaluations == 15);
    }
    const auto r = an::integrate([](double x) { return 3.0 * x * x - 2.0 * x + 1.0; }, -1.0, 2.0, 1e-12);
    CHECK(r.value == doctest::Approx(9.0 - 3.0 + 3.0).epsilon(1e-15));
}

TEST_CASE("smooth and endpoint-singular integrands") {
    const double pi = 3.14159265358979323846;
    CHECK(an::integrate([](double x) { return std::sin(x); }, 0.0, pi, 1e-12).value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(an::quadrature([](double x) { return 1.0 / (1.0 + x * x); }, 1e-12).value == doctest::Approx(pi / 4.0).epsilon(1e-13));
    const auto s = an::quadrature([](double x) { return std::log(x); }, 1e-10);
    CHECK(s.converged);
    CHECK(s.value == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(s.error_estimate < 1e-9);
}

TEST_CASE("budget exhaustion is reported") {
    const auto r = an::quadrature([](double x) { return 1.0 / std::sqrt(x); }, 1e-15, 150);
    CHECK_FALSE(r.converged);
    CHECK(r.evaluations <= 150);
    CHECK_THROWS_AS(an::quadrature([](double) { return 1.0; }, 0.0), std::invalid_argument);
}
