#include "cauchysum/analytic/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace cauchysum::analytic {
namespace {

// Kronrod abscissae (positive half) and weights; odd indices are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double res_k = fc * kWgk[7];
    double res_g = fc * kWg[3];
    double res_abs = std::abs(res_k);
    double fv1[7];
    double fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double s = fv1[j] + fv2[j];
        res_k += kWgk[j] * s;
        res_abs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) res_g += kWg[j / 2] * s;
    }
    const double mean = 0.5 * res_k;
    double res_asc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) res_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    const double scale = std::abs(half);
    res_k *= half;
    res_g *= half;
    res_abs *= scale;
    res_asc *= scale;

    double err = std::abs(res_k - res_g);
    if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * res_abs;
    err = std::max(err, floor);
    if (!std::isfinite(res_k)) err = std::numeric_limits<double>::infinity();
    return {a, b, res_k, err};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, double tol, long max_evaluations) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
    QuadratureResult out;
    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double total_err = first.error;
    heap.push(first);

    while (total_err > tol && out.evaluations + 30 <= max_evaluations) {
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted at double resolution
        heap.pop();
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if (heap.size() % 64 == 0) {
            // Re-sum to shed accumulated rounding from the running updates.
            auto copy = heap;
            total = 0.0;
            total_err = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                total_err += copy.top().error;
                copy.pop();
            }
        }
    }

    double value = 0.0;
    double err = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    out.value = value;
    out.error_estimate = err;
    out.converged = std::isfinite(value) && err <= tol;
    return out;
}

QuadratureResult quadrature(const Integrand& f, double tol, long max_evaluations) {
    return integrate(f, 0.0, 1.0, tol, max_evaluations);
}

}  // namespace cauchysum::analytic
