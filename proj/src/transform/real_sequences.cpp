#include "cauchysum/transform/real_sequences.hpp"

#include "cauchysum/analytic/special_functions.hpp"
#include "cauchysum/exact/kernel.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace cauchysum::transform {
namespace {

using analytic::kPi;

constexpr int kStirlingExactRows = 300;
constexpr int kStirlingExactOrder = 12;

const std::vector<double>& exact_cauchy_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(static_cast<std::size_t>(kExactCauchyLimit) + 1);
        for (long n = 0; n <= kExactCauchyLimit; ++n) {
            t[static_cast<std::size_t>(n)] = abs(exact::cauchy_over_factorial(n)).to_double();
        }
        return t;
    }();
    return table;
}

// Trapezoid nodes in y = ln v on [-45, 5] with step 0.2.
struct CauchyNodes {
    static constexpr int kCount = 251;
    std::array<double, kCount> weight{};  // h e^{y - e^y}
    std::array<double, kCount> v{};
    CauchyNodes() {
        constexpr double lo = -45.0;
        constexpr double h = 0.2;
        for (int i = 0; i < kCount; ++i) {
            const double y = lo + h * i;
            v[static_cast<std::size_t>(i)] = std::exp(y);
            weight[static_cast<std::size_t>(i)] = h * std::exp(y - std::exp(y));
        }
    }
};

double cauchy_integral(double n) {
    static const CauchyNodes nodes;
    const double inv = 1.0 / (n - 1.0);
    constexpr double pi2 = kPi * kPi;
    double s = 0.0;
    for (int i = 0; i < CauchyNodes::kCount; ++i) {
        const double w = nodes.weight[static_cast<std::size_t>(i)];
        if (w == 0.0) continue;
        const double l = std::log(std::expm1(nodes.v[static_cast<std::size_t>(i)] * inv));
        s += w / (pi2 + l * l);
    }
    return s * inv;
}

const std::vector<std::array<double, kStirlingExactOrder + 1>>& exact_stirling_table() {
    static const auto table = [] {
        std::vector<std::array<double, kStirlingExactOrder + 1>> t(kStirlingExactRows + 1);
        for (long n = 0; n <= kStirlingExactRows; ++n) {
            const auto row = exact::stirling1_row(n);
            const BigRational fact(exact::factorial(n));
            auto& out = t[static_cast<std::size_t>(n)];
            out.fill(0.0);
            for (long m = 0; m <= std::min<long>(n, kStirlingExactOrder); ++m) {
                out[static_cast<std::size_t>(m)] =
                    abs(BigRational(row[static_cast<std::size_t>(m)]) / fact).to_double();
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

double cauchy_abs_ratio(double n) {
    if (!(n >= 0.0)) throw std::domain_error("cauchy_abs_ratio: index must be non-negative");
    if (n <= kExactCauchyLimit) return exact_cauchy_table()[static_cast<std::size_t>(n)];
    return cauchy_integral(n);
}

double signed_cauchy_weight(double n) {
    if (n == 0.0) return 1.0;
    return -cauchy_abs_ratio(n);
}

double stirling_weight(double n, int m) {
    if (m < 0) throw std::domain_error("stirling_weight: order must be non-negative");
    if (!(n >= 0.0)) throw std::domain_error("stirling_weight: index must be non-negative");
    if (n < m) return 0.0;
    if (n <= kStirlingExactRows && m <= kStirlingExactOrder) {
        return exact_stirling_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }
    if (m == 0) return 0.0;
    // e_{m-1}(1, 1/2, ..., 1/(n-1)) / n by Newton's identities.
    std::vector<double> p(static_cast<std::size_t>(m));
    for (int j = 1; j < m; ++j) p[static_cast<std::size_t>(j)] = analytic::harmonic_real(n - 1.0, j);
    std::vector<double> e(static_cast<std::size_t>(m), 0.0);
    e[0] = 1.0;
    for (int k = 1; k < m; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) {
            const double term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            s += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = s / k;
    }
    return e[static_cast<std::size_t>(m - 1)] / n;
}

double central_binomial_over_4n(double n) { return analytic::central_binomial_real(n); }

double harmonic_difference(double n, int a, int b, int m) {
    return analytic::harmonic_real(n + a, m) - analytic::harmonic_real(b, m);
}

double hyperharmonic_real(double n, int r) {
    if (r < 1) throw std::domain_error("hyperharmonic_real: r must be >= 1");
    return analytic::binom_real(n + r - 1.0, r - 1) * harmonic_difference(n, r - 1, r - 1);
}

double skew_harmonic_gap(long n) {
    const double beta = analytic::alternating_tail(static_cast<double>(n) + 1.0);
    return (n % 2 == 0) ? -beta : beta;
}

}  // namespace cauchysum::transform
