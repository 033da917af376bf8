#include "cauchysum/exact/big_rational.hpp"

#include <doctest.h>

#include <stdexcept>

using cauchysum::BigInt;
using cauchysum::BigRational;

TEST_CASE("rationals are kept in lowest terms") {
    const BigRational q(BigInt(6), BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.to_string() == "-3/2");
    CHECK(BigRational(7).to_string() == "7");
    CHECK(BigRational(BigInt(4), BigInt(2)).is_integer());
}

TEST_CASE("arithmetic and ordering") {
    const BigRational a(BigInt(1), BigInt(3)), b(BigInt(1), BigInt(6));
    CHECK(a + b == BigRational(BigInt(1), BigInt(2)));
    CHECK(a - b == b);
    CHECK(a * b == BigRational(BigInt(1), BigInt(18)));
    CHECK(a / b == BigRational(2));
    CHECK(-a == BigRational(BigInt(-1), BigInt(3)));
    CHECK(b < a);
    CHECK(cauchysum::abs(-a) == a);
    CHECK(cauchysum::pow(a, 3) == BigRational(BigInt(1), BigInt(27)));
    CHECK(cauchysum::pow(a, -2) == BigRational(9));
    CHECK(cauchysum::pow(a, 0) == BigRational(1));
    CHECK(cauchysum::sign_power(3) == BigRational(-1));
    CHECK(cauchysum::sign_power(4) == BigRational(1));
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(BigRational(0).is_zero());
}

TEST_CASE("parsing") {
    CHECK(BigRational::parse("-10/4") == BigRational(BigInt(-5), BigInt(2)));
    CHECK(BigRational::parse("12") == BigRational(12));
    CHECK_THROWS_AS(BigRational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse("1/0"), std::domain_error);
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(cauchysum::pow(BigRational(0), -1), std::domain_error);
}

TEST_CASE("conversion to floating point") {
    CHECK(BigRational(BigInt(1), BigInt(3)).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    // Huge numerator and denominator whose ratio is moderate.
    BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
    const BigRational q(big * 3, big * 7);
    CHECK(q.to_double() == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
    CHECK(static_cast<double>(q.to_long_double()) == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
}
