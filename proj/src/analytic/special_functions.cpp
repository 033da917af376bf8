#include "cauchysum/analytic/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace cauchysum::analytic {
namespace {

// B_2, B_4, ..., B_20
constexpr std::array<double, 10> kBernoulliEven = {
    1.0 / 6.0,       -1.0 / 30.0,  1.0 / 42.0,         -1.0 / 30.0,      5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,    -3617.0 / 510.0,    43867.0 / 798.0,  -174611.0 / 330.0,
};

constexpr long double kHalfLog2Pi = 0.918938533204672741780329736406L;

double stirling_tail(double x) {
    double s = 0.0;
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double p = inv;
    for (int k = 1; k <= 8; ++k) {
        s += kBernoulliEven[static_cast<std::size_t>(k - 1)] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    return s;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: argument must be positive");
    // Extended precision for the main term and shift, which nearly cancel
    // around the zeros at x = 1 and x = 2.
    long double prod = 1.0L;
    while (x < 15.0) {
        prod *= x;
        x += 1.0;
    }
    const long double xl = x;
    const long double main = (xl - 0.5L) * std::log(xl) - xl - std::log(prod);
    return static_cast<double>(main + kHalfLog2Pi + stirling_tail(x));
}

double log_gamma_ratio(double x, double a) {
    if (!(x > 0.0) || !(x + a > 0.0)) throw DomainError("log_gamma_ratio: arguments must be positive");
    if (a == 0.0) return 0.0;
    double shift = 0.0;
    double prod = 1.0;
    while (x < 15.0 || x + a < 15.0) {
        prod *= (x + a) / x;
        x += 1.0;
    }
    shift = std::log(prod);
    const double y = x + a;
    double s = (x - 0.5) * std::log1p(a / x) + a * std::log(y) - a;
    const double ix = 1.0 / x;
    const double iy = 1.0 / y;
    double px = ix;
    double py = iy;
    for (int k = 1; k <= 8; ++k) {
        s += kBernoulliEven[static_cast<std::size_t>(k - 1)] / (2.0 * k * (2.0 * k - 1.0)) * (py - px);
        px *= ix * ix;
        py *= iy * iy;
    }
    return s - shift;
}

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double p = inv2;
    double s = std::log(x) - 0.5 / x;
    for (int k = 1; k <= 8; ++k) {
        s -= kBernoulliEven[static_cast<std::size_t>(k - 1)] / (2.0 * k) * p;
        p *= inv2;
    }
    return s + acc;
}

double zeta_int(int k) {
    if (k < 2) throw DomainError("zeta_int: k must be >= 2");
    if (k > 60) return 1.0 + std::ldexp(1.0, -k) + std::pow(3.0, -k);
    constexpr int N = 16;
    double s = 0.0;
    for (int n = N - 1; n >= 1; --n) s += std::pow(static_cast<double>(n), -k);
    // Euler-Maclaurin tail from N.
    const double dn = N;
    double tail = std::pow(dn, 1 - k) / (k - 1) + 0.5 * std::pow(dn, -k);
    double rising = k;                        // k (k+1) ... (k+2j-2)
    double fact = 2.0;                        // (2j)!
    double power = std::pow(dn, -k - 1);      // N^{-k-2j+1}
    for (int j = 1; j <= 9; ++j) {
        tail += kBernoulliEven[static_cast<std::size_t>(j - 1)] / fact * rising * power;
        rising *= (k + 2.0 * j - 1.0) * (k + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        power /= dn * dn;
    }
    return s + tail;
}

double ein(double z) {
    if (!std::isfinite(z) || std::abs(z) > 50.0) return std::numeric_limits<double>::quiet_NaN();
    if (z == 0.0) return 0.0;
    if (z > 2.0) {
        // Ein(z) = E1(z) + ln z + gamma, E1 by its continued fraction.
        constexpr double tiny = 1e-300;
        double b = z + 1.0;
        double c = 1.0 / tiny;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i < 1000; ++i) {
            const double an = -static_cast<double>(i) * i;
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            const double del = c * d;
            h *= del;
            if (std::abs(del - 1.0) < 1e-16) break;
        }
        return h * std::exp(-z) + std::log(z) + kEulerGamma;
    }
    double sum = 0.0;
    double t = 1.0;  // z^n / n!
    for (int n = 1; n < 500; ++n) {
        t *= z / n;
        const double term = (n % 2 == 1 ? t : -t) / n;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double central_binomial_real(double x) {
    if (!(x > -0.5)) throw DomainError("central_binomial_real: argument must exceed -1/2");
    // Duplication formula: Gamma(2x+1) / (Gamma(x+1)^2 4^x) = Gamma(x+1/2) / (sqrt(pi) Gamma(x+1)).
    return std::exp(log_gamma_ratio(x + 1.0, -0.5)) / std::sqrt(kPi);
}

double binom_real(double x, int q) {
    if (q < 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < q; ++i) r *= (x - i) / (i + 1.0);
    return r;
}

double harmonic_real(double n, int m) {
    if (!(n >= 0.0)) throw DomainError("harmonic_real: n must be non-negative");
    if (m < 1) throw DomainError("harmonic_real: order must be >= 1");
    if (n < 64.0) {
        double s = 0.0;
        for (long k = static_cast<long>(n); k >= 1; --k) s += std::pow(static_cast<double>(k), -m);
        return s;
    }
    if (m == 1) {
        const double inv2 = 1.0 / (n * n);
        double p = inv2;
        double s = std::log(n) + kEulerGamma + 0.5 / n;
        for (int k = 1; k <= 7; ++k) {
            s -= kBernoulliEven[static_cast<std::size_t>(k - 1)] / (2.0 * k) * p;
            p *= inv2;
        }
        return s;
    }
    const double big = n + 1.0;
    double tail = std::pow(big, 1 - m) / (m - 1) + 0.5 * std::pow(big, -m);
    double rising = m;
    double fact = 2.0;
    double power = std::pow(big, -m - 1);
    for (int j = 1; j <= 7; ++j) {
        tail += kBernoulliEven[static_cast<std::size_t>(j - 1)] / fact * rising * power;
        rising *= (m + 2.0 * j - 1.0) * (m + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        power /= big * big;
    }
    return zeta_int(m) - tail;
}

double alternating_tail(double x) {
    if (!(x > 0.0)) throw DomainError("alternating_tail: argument must be positive");
    double acc = 0.0;
    double sgn = 1.0;
    while (x < 20.0) {
        acc += sgn / x;
        sgn = -sgn;
        x += 1.0;
    }
    const double y0 = 0.5 * x;
    const double y1 = 0.5 * (x + 1.0);
    double d = std::log1p(1.0 / x) - 0.5 / y1 + 0.5 / y0;
    const double i0 = 1.0 / (y0 * y0);
    const double i1 = 1.0 / (y1 * y1);
    double p0 = i0;
    double p1 = i1;
    for (int k = 1; k <= 8; ++k) {
        d -= kBernoulliEven[static_cast<std::size_t>(k - 1)] / (2.0 * k) * (p1 - p0);
        p0 *= i0;
        p1 *= i1;
    }
    return acc + sgn * 0.5 * d;
}

}  // namespace cauchysum::analytic
