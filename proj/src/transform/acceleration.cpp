#include "cauchysum/transform/acceleration.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cauchysum::transform {

std::string to_string(AccelMethod m) {
    switch (m) {
        case AccelMethod::automatic: return "automatic";
        case AccelMethod::none: return "none";
        case AccelMethod::euler: return "euler";
        case AccelMethod::wynn_epsilon: return "wynn-epsilon";
        case AccelMethod::wynn_rho: return "wynn-rho";
    }
    return "unknown";
}

std::optional<AccelMethod> parse_accel_method(std::string_view text) {
    if (text == "automatic" || text == "auto") return AccelMethod::automatic;
    if (text == "none") return AccelMethod::none;
    if (text == "euler") return AccelMethod::euler;
    if (text == "wynn-epsilon" || text == "wynn") return AccelMethod::wynn_epsilon;
    if (text == "wynn-rho") return AccelMethod::wynn_rho;
    return std::nullopt;
}

namespace {

Extrapolation fallback(std::span<const double> s) {
    const std::size_t n = s.size();
    return {s[n - 1], std::abs(s[n - 1] - s[n - 2]), true};
}

// Shared driver for the epsilon and rho tables. Column k+1 is built from
// columns k and k-1; only even columns approximate the limit. The estimate
// with the smallest spread between its last two entries wins.
template <class Step>
Extrapolation wynn_table(std::span<const double> s, Step step) {
    const std::size_t n = s.size();
    std::vector<double> prev(n, 0.0);             // column k-1
    std::vector<double> cur(s.begin(), s.end());  // column k
    Extrapolation best{s[n - 1], std::abs(s[n - 1] - s[n - 2]), false};
    bool singular = false;
    for (std::size_t k = 0; cur.size() >= 2; ++k) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double d = cur[i + 1] - cur[i];
            if (d == 0.0 || !std::isfinite(d)) {
                singular = true;
                next.resize(i);
                break;
            }
            next[i] = step(prev[i + 1], d, k, i);
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (cur.size() < 2) break;
        if ((k + 1) % 2 == 0) {
            const double v = cur.back();
            const double err = std::abs(cur.back() - cur[cur.size() - 2]);
            if (std::isfinite(v) && std::isfinite(err) && err < best.error_estimate) {
                best = {v, err, false};
            }
        }
        if (singular) break;
    }
    if (!std::isfinite(best.value)) return fallback(s);
    return best;
}

}  // namespace

Extrapolation wynn_epsilon(std::span<const double> s) {
    if (s.size() < 4) throw std::invalid_argument("wynn_epsilon: need at least 4 partial sums");
    return wynn_table(s, [](double below, double d, std::size_t, std::size_t) { return below + 1.0 / d; });
}

Extrapolation wynn_rho(std::span<const double> s) {
    if (s.size() < 4) throw std::invalid_argument("wynn_rho: need at least 4 partial sums");
    return wynn_table(s, [](double below, double d, std::size_t k, std::size_t) {
        return below + static_cast<double>(k + 1) / d;
    });
}

double cvz_alternating(std::span<const double> a) {
    const auto n = static_cast<double>(a.size());
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double kk = static_cast<double>(k);
        c = b - c;
        s += c * a[k];
        b = (kk + n) * (kk - n) * b / ((kk + 0.5) * (kk + 1.0));
    }
    return s / d;
}

Extrapolation accelerate(std::span<const double> s, AccelMethod method) {
    if (s.size() < 4) throw std::invalid_argument("accelerate: need at least 4 partial sums");
    bool constant = true;
    for (double v : s) constant = constant && v == s[0];
    if (constant) return {s[0], 0.0, false};
    switch (method) {
        case AccelMethod::none: return {s.back(), std::abs(s[s.size() - 1] - s[s.size() - 2]), false};
        case AccelMethod::automatic:
        case AccelMethod::wynn_epsilon: return wynn_epsilon(s);
        case AccelMethod::wynn_rho: return wynn_rho(s);
        case AccelMethod::euler: {
            // Increments t_k = S_k - S_{k-1} with S_{-1} = 0, read as (-1)^k a_k.
            std::vector<double> a(s.size());
            for (std::size_t k = 0; k < s.size(); ++k) {
                const double t = k == 0 ? s[0] : s[k] - s[k - 1];
                a[k] = (k % 2 == 0) ? t : -t;
            }
            const double full = cvz_alternating(a);
            const std::size_t m = (3 * a.size()) / 4;
            const double part = cvz_alternating(std::span<const double>(a).first(m));
            if (!std::isfinite(full)) return fallback(s);
            return {full, std::abs(full - part), false};
        }
    }
    return fallback(s);
}

}  // namespace cauchysum::transform
