#include "cauchysum/exact/kernel.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <vector>

namespace ex = cauchysum::exact;
using cauchysum::BigInt;
using cauchysum::BigRational;

namespace {
BigRational q(long a, long b) { return BigRational(BigInt(a), BigInt(b)); }
}  // namespace

TEST_CASE("Cauchy numbers: known values and polynomial-integral oracle") {
    CHECK(ex::cauchy(0) == BigRational(1));
    CHECK(ex::cauchy(1) == q(1, 2));
    CHECK(ex::cauchy(2) == q(-1, 6));
    CHECK(ex::cauchy(3) == q(1, 4));
    CHECK(ex::cauchy(4) == q(-19, 30));
    CHECK(ex::cauchy(5) == q(9, 4));
    for (long n = 0; n <= 40; ++n) CHECK(ex::cauchy(n) == oracle::cauchy(n));
    for (long n = 0; n <= 20; ++n) {
        CHECK(ex::cauchy_over_factorial(n) == ex::cauchy(n) / BigRational(oracle::factorial(n)));
        // Signs alternate from n = 1 on.
        if (n >= 1) CHECK(ex::cauchy(n).sign() == (n % 2 == 1 ? 1 : -1));
    }
}

TEST_CASE("Stirling numbers of both kinds") {
    CHECK(ex::stirling1(4, 2) == 11);
    CHECK(ex::stirling1(5, 3) == 35);
    CHECK(ex::stirling1(5, 2) == -50);
    CHECK(ex::stirling1(0, 0) == 1);
    CHECK(ex::stirling1(3, 0) == 0);
    CHECK(ex::stirling1(3, 5) == 0);
    CHECK(ex::stirling2(5, 2) == 15);
    CHECK(ex::stirling2(7, 3) == 301);
    for (long n = 0; n <= 18; ++n) {
        const auto row = ex::stirling1_row(n);
        REQUIRE(row.size() == static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) {
            CHECK(BigRational(row[static_cast<std::size_t>(k)]) == oracle::stirling1(n, k));
            CHECK(BigRational(ex::stirling2(n, k)) == oracle::rstirling2(0, n, k));
        }
    }
}

TEST_CASE("r-Stirling numbers in the shifted convention") {
    for (long r = 0; r <= 4; ++r) {
        CHECK(ex::rstirling1(r, 0, 0) == 1);
        CHECK(ex::rstirling2(r, 0, 0) == 1);
        for (long n = 0; n <= 10; ++n)
            for (long k = 0; k <= 10; ++k) {
                CHECK(BigRational(ex::rstirling1(r, n, k)) == oracle::rstirling1(r, n, k));
                CHECK(BigRational(ex::rstirling2(r, k, n)) == oracle::rstirling2(r, k, n));
            }
    }
    // r = 0 is the classical family; r = 1 is the classical family shifted by one.
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(ex::rstirling1(0, n, k) == ex::stirling1(n, k));
            CHECK(ex::rstirling1(1, n, k) == ex::stirling1(n + 1, k + 1));
        }
}

TEST_CASE("binomials and factorials") {
    CHECK(ex::binomial(10, 3) == 120);
    CHECK(ex::binomial(5, 7) == 0);
    CHECK(ex::factorial(0) == 1);
    CHECK(ex::factorial(20) == BigInt("2432902008176640000"));
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k) CHECK(ex::binomial(n, k) == oracle::binomial(n, k));
}

TEST_CASE("harmonic-type numbers") {
    CHECK(ex::harmonic(0) == BigRational(0));
    CHECK(ex::harmonic(4) == q(25, 12));
    CHECK(ex::harmonic(3, 2) == q(49, 36));
    CHECK(ex::skew_harmonic(3) == q(5, 6));
    CHECK(ex::hyperharmonic(3, 2) == q(13, 3));
    for (long n = 0; n <= 30; ++n) {
        for (long m = 1; m <= 4; ++m) CHECK(ex::harmonic(n, m) == oracle::harmonic(n, m));
        BigRational skew(0);
        for (long k = 1; k <= n; ++k) skew += cauchysum::sign_power(k + 1) / BigRational(k);
        CHECK(ex::skew_harmonic(n) == skew);
    }
    for (long r = 1; r <= 5; ++r)
        for (long n = 0; n <= 15; ++n) CHECK(ex::hyperharmonic(n, r) == oracle::hyperharmonic(n, r));
}

TEST_CASE("S(-n, r) against complete homogeneous polynomials") {
    CHECK(ex::stirling2_negative(0, 1) == BigRational(1));
    CHECK(ex::stirling2_negative(1, 2) == q(-3, 4));
    for (long n = 0; n <= 10; ++n)
        for (long r = 1; r <= 6; ++r) CHECK(ex::stirling2_negative(n, r) == oracle::stirling2_negative(n, r));
}

TEST_CASE("complete Bell polynomials against Faa di Bruno enumeration") {
    CHECK(ex::bell_complete(std::vector<BigRational>{}) == BigRational(1));
    // Y_m(1, ..., 1) are the Bell numbers.
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (long m = 0; m <= 7; ++m) {
        const std::vector<BigRational> ones(static_cast<std::size_t>(m), BigRational(1));
        CHECK(ex::bell_complete(ones) == BigRational(bell[m]));
    }
    const std::vector<BigRational> t{q(1, 2), q(-1, 3), q(2, 5), q(7, 4), q(-3, 1), q(1, 7)};
    for (std::size_t m = 0; m <= t.size(); ++m) {
        const std::vector<BigRational> head(t.begin(), t.begin() + static_cast<long>(m));
        CHECK(ex::bell_complete(head) == oracle::bell_complete(head));
        CHECK(ex::bell_complete(static_cast<long>(m), head) == oracle::bell_complete(head));
    }
    CHECK_THROWS_AS(ex::bell_complete(3, t), std::invalid_argument);
}

TEST_CASE("Cauchy polynomial of the second kind at negative integers") {
    // (-1)^n int_0^1 (x+r)(x+r+1)...(x+r+n-1) dx
    for (long r = 0; r <= 3; ++r)
        for (long n = 0; n <= 10; ++n) {
            oracle::Poly p{BigRational(1)};
            for (long i = 0; i < n; ++i) p = oracle::multiply_linear(p, BigRational(-(r + i)));
            CHECK(ex::cauchy2_at_negative(n, r) == cauchysum::sign_power(n) * oracle::integrate_unit(p));
        }
}

TEST_CASE("rising factorial") {
    CHECK(ex::rising(q(1, 2), 0) == BigRational(1));
    CHECK(ex::rising(q(1, 2), 3) == q(15, 8));
    CHECK(ex::rising(BigRational(1), 5) == BigRational(120));
}

TEST_CASE("index bounds and argument checks") {
    const auto saved = ex::limits();
    ex::set_limits({50, 20});
    CHECK_THROWS_AS(ex::cauchy(51), ex::IndexBoundError);
    CHECK_THROWS_AS(ex::stirling1(21, 3), ex::IndexBoundError);
    CHECK_NOTHROW(ex::cauchy(50));
    ex::set_limits(saved);
    ex::clear_cache();
    CHECK(ex::cauchy(4) == q(-19, 30));
    CHECK_THROWS_AS(ex::cauchy(-1), std::invalid_argument);
    CHECK_THROWS_AS(ex::harmonic(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(ex::hyperharmonic(3, 0), std::invalid_argument);
}
