#include "cauchysum/analytic/power_series.hpp"
#include "cauchysum/analytic/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

namespace an = cauchysum::analytic;

TEST_CASE("construction, arithmetic and evaluation") {
    const an::PowerSeries a(3, {1.0, 2.0, 0.0, -1.0});
    const an::PowerSeries b(3, {0.5, -1.0});
    CHECK(a.order() == 3);
    CHECK(b[2] == 0.0);
    const auto sum = an::ps_add(a, b);
    CHECK(sum[0] == 1.5);
    CHECK(sum[1] == 1.0);
    const auto prod = an::ps_mul(a, b);
    CHECK(prod[0] == 0.5);
    CHECK(prod[1] == doctest::Approx(0.0));
    CHECK(prod[2] == doctest::Approx(-2.0));
    CHECK(prod[3] == doctest::Approx(-0.5));
    CHECK(a.evaluate(2.0) == doctest::Approx(1.0 + 4.0 - 8.0));
    const auto scaled = an::ps_scale_argument(a, 2.0);
    CHECK(scaled[3] == doctest::Approx(-8.0));
    CHECK_THROWS_AS(an::PowerSeries(an::kMaxSeriesOrder + 1), std::invalid_argument);
    CHECK_THROWS_AS(an::PowerSeries(-1), std::invalid_argument);
}

TEST_CASE("exp of a series") {
    const auto e = an::ps_exp(an::PowerSeries(10, {0.0, 1.0}));
    double f = 1.0;
    for (int k = 0; k <= 10; ++k) {
        if (k > 0) f *= k;
        CHECK(e[k] == doctest::Approx(1.0 / f).epsilon(1e-15));
    }
    CHECK_THROWS_AS(an::ps_exp(an::PowerSeries(2, {1.0})), std::invalid_argument);
}

TEST_CASE("ln Gamma(1+t) and central binomial series") {
    const auto lg = an::ps_loggamma_shifted(6);
    CHECK(lg[0] == 0.0);
    CHECK(lg[1] == doctest::Approx(-an::kEulerGamma).epsilon(1e-15));
    CHECK(lg[2] == doctest::Approx(an::zeta_int(2) / 2.0).epsilon(1e-15));
    CHECK(lg[3] == doctest::Approx(-an::zeta_int(3) / 3.0).epsilon(1e-15));
    const auto cb = an::ps_central_binomial(8);
    CHECK(cb[0] == doctest::Approx(1.0));
    CHECK(cb[1] == doctest::Approx(-2.0 * an::kLn2).epsilon(1e-15));
    for (double x : {-0.1, 0.05, 0.1}) CHECK(cb.evaluate(x) == doctest::Approx(an::central_binomial_real(x)).epsilon(1e-5));
}
