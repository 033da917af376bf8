#include "cauchysum/analytic/power_series.hpp"

#include "cauchysum/analytic/special_functions.hpp"

#include <algorithm>
#include <string>

namespace cauchysum::analytic {
namespace {

void check_order(int order) {
    if (order < 0 || order > kMaxSeriesOrder) {
        throw std::invalid_argument("PowerSeries: order must lie in [0, " + std::to_string(kMaxSeriesOrder) + "]");
    }
}

}  // namespace

PowerSeries::PowerSeries(int order) : order_(order) {
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

PowerSeries::PowerSeries(int order, std::vector<double> coefficients) : PowerSeries(order) {
    const std::size_t n = std::min(coefficients.size(), coeffs_.size());
    std::copy_n(coefficients.begin(), n, coeffs_.begin());
}

double PowerSeries::evaluate(double x) const {
    double acc = 0.0;
    for (int j = order_; j >= 0; --j) acc = acc * x + (*this)[j];
    return acc;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int j = 0; j <= out.order(); ++j) out[j] = a[j] + b[j];
    return out;
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) {
        double s = 0.0;
        for (int k = 0; k <= n; ++k) s += a[k] * b[n - k];
        out[n] = s;
    }
    return out;
}

PowerSeries ps_exp(const PowerSeries& a) {
    if (a[0] != 0.0) throw std::invalid_argument("ps_exp: constant term must be zero");
    // b' = a' b  =>  n b_n = sum_{k=1}^{n} k a_k b_{n-k}
    PowerSeries b(a.order());
    b[0] = 1.0;
    for (int n = 1; n <= a.order(); ++n) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += k * a[k] * b[n - k];
        b[n] = s / n;
    }
    return b;
}

PowerSeries ps_scale_argument(const PowerSeries& a, double s) {
    PowerSeries out(a.order());
    double p = 1.0;
    for (int j = 0; j <= a.order(); ++j) {
        out[j] = a[j] * p;
        p *= s;
    }
    return out;
}

PowerSeries ps_loggamma_shifted(int order) {
    PowerSeries out(order);
    if (order >= 1) out[1] = -kEulerGamma;
    for (int k = 2; k <= order; ++k) out[k] = (k % 2 == 0 ? 1.0 : -1.0) * zeta_int(k) / k;
    return out;
}

PowerSeries ps_central_binomial(int order) {
    const PowerSeries lg = ps_loggamma_shifted(order);
    PowerSeries log_f = ps_scale_argument(lg, 2.0);
    for (int j = 0; j <= order; ++j) log_f[j] -= 2.0 * lg[j];
    if (order >= 1) log_f[1] -= 2.0 * kLn2;
    return ps_exp(log_f);
}

}  // namespace cauchysum::analytic
