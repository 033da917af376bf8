#ifndef CAUCHYSUM_ANALYTIC_POWER_SERIES_HPP
#define CAUCHYSUM_ANALYTIC_POWER_SERIES_HPP

#include <stdexcept>
#include <vector>

namespace cauchysum::analytic {

inline constexpr int kMaxSeriesOrder = 30;

// Truncated Maclaurin series sum_{j=0}^{order} c_j x^j.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    PowerSeries(int order, std::vector<double> coefficients);

    int order() const { return order_; }
    double operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
    double& operator[](int j) { return coeffs_[static_cast<std::size_t>(j)]; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    /// Horner evaluation of the truncated polynomial.
    double evaluate(double x) const;

private:
    int order_;
    std::vector<double> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
/// exp(a(x)); a_0 must be zero.
PowerSeries ps_exp(const PowerSeries& a);
/// a(s x).
PowerSeries ps_scale_argument(const PowerSeries& a, double s);
/// Maclaurin series of ln Gamma(1+t) = -gamma t + sum_{k>=2} (-1)^k zeta(k) t^k / k.
PowerSeries ps_loggamma_shifted(int order);
/// Maclaurin series of C(2x,x) 4^{-x} = Gamma(2x+1) / (Gamma(x+1)^2 4^x).
PowerSeries ps_central_binomial(int order);

}  // namespace cauchysum::analytic

#endif
