#include "cauchysum/transform/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cauchysum::transform {

std::string to_string(DecayClass d) {
    switch (d) {
        case DecayClass::finite: return "finite";
        case DecayClass::geometric: return "geometric";
        case DecayClass::alternating: return "alternating";
        case DecayClass::monotone: return "monotone";
        case DecayClass::logarithmic: return "logarithmic";
        case DecayClass::mixed: return "mixed";
    }
    return "unknown";
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kHeadTerms = 64;
constexpr int kTailTerms = 40;
constexpr int kTailCheck = 30;
constexpr int kMaxDoublings = 300;
constexpr long kRawCheckStride = 256;
constexpr int kInnerRhoTerms = 60;

// Neumaier compensated sum.
class Accumulator {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_sum_ += std::abs(x);
    }
    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_sum_ = 0.0;
};

double eval(const TermGenerator& g, double n) {
    const double t = g.term(n);
    if (!std::isfinite(t)) throw std::domain_error("series term is not finite at n = " + std::to_string(n));
    return t;
}

double rounding_floor(const Accumulator& acc) { return 4.0 * kEps * acc.abs_sum(); }

SeriesResult sum_finite(const TermGenerator& g) {
    if (!g.last) throw std::invalid_argument("finite series needs a last index");
    Accumulator acc;
    SeriesResult r;
    for (long n = g.first; n <= *g.last; ++n) acc.add(eval(g, static_cast<double>(n)));
    r.value = acc.value();
    r.error_estimate = 0.0;
    r.terms_used = std::max(0L, *g.last - g.first + 1);
    r.method = "finite";
    r.converged = true;
    return r;
}

SeriesResult sum_raw(const TermGenerator& g, const SeriesOptions& opt) {
    Accumulator acc;
    SeriesResult r;
    r.method = "none";
    long n = g.first;
    const long stop = g.first + opt.max_terms;
    TailEstimate tail{std::numeric_limits<double>::infinity(), false};
    while (n < stop) {
        acc.add(eval(g, static_cast<double>(n)));
        ++n;
        if ((n - g.first) % kRawCheckStride == 0 || n == stop) {
            tail = tail_estimate(g, std::max(n - 1, 10L));
            const double target = g.decay == DecayClass::geometric
                                      ? std::min(opt.tol, 1e-17 * std::max(1.0, std::abs(acc.value())))
                                      : opt.tol;
            if (tail.bound <= target) break;
        }
    }
    r.value = acc.value();
    r.error_estimate = std::max(tail.bound + rounding_floor(acc), kEps * std::abs(r.value));
    r.terms_used = n - g.first;
    r.converged = r.error_estimate <= opt.tol;
    r.heuristic_tail = tail.heuristic;
    return r;
}

// Euler-van Wijngaarden: the monotone tail sum_{k>=1} v_k (v_k = t_{N0+k-1})
// equals the alternating sum sum_{k>=1} (-1)^{k-1} w_k with
// w_k = sum_{j>=0} 2^j v_{2^j k}, which the CVZ weights then sum.
SeriesResult sum_van_wijngaarden(const TermGenerator& g, const SeriesOptions& opt) {
    SeriesResult r;
    r.method = "van-wijngaarden+euler";
    Accumulator head;
    const long start = g.first;
    for (long n = start; n < start + kHeadTerms; ++n) head.add(eval(g, static_cast<double>(n)));
    long evaluations = kHeadTerms;
    const double base = static_cast<double>(start + kHeadTerms) - 1.0;

    std::vector<double> w(kTailTerms);
    bool doubling_ok = true;
    double inner_error = 0.0;
    for (int k = 0; k < kTailTerms; ++k) {
        Accumulator acc;
        std::vector<double> partials;
        double scale = 1.0;
        int quiet = 0;
        int j = 0;
        for (; j < kMaxDoublings; ++j) {
            const double idx = base + scale * (k + 1);
            const double contrib = scale * eval(g, idx);
            ++evaluations;
            acc.add(contrib);
            partials.push_back(acc.value());
            if (std::abs(contrib) <= 1e-18 * std::abs(acc.value()) || contrib == 0.0) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
            scale *= 2.0;
        }
        w[static_cast<std::size_t>(k)] = acc.value();
        if (j == kMaxDoublings) {
            // Logarithmic terms leave an inner tail decaying like 1/j; the
            // rho extrapolation removes it, and its spread is the error.
            const auto head_part = std::span<const double>(partials).first(kInnerRhoTerms);
            const auto check_part = std::span<const double>(partials).first(kInnerRhoTerms - 10);
            const Extrapolation e = wynn_rho(head_part), c = wynn_rho(check_part);
            if (e.singular || !std::isfinite(e.value)) {
                doubling_ok = false;
            } else {
                w[static_cast<std::size_t>(k)] = e.value;
                inner_error += std::abs(e.value - c.value);
            }
        }
    }
    const double tail = cvz_alternating(w);
    const double tail_check = cvz_alternating(std::span<const double>(w).first(kTailCheck));
    r.value = head.value() + tail;
    r.error_estimate = std::abs(tail - tail_check) + inner_error + rounding_floor(head) + 8.0 * kEps * std::abs(r.value);
    r.heuristic_tail = inner_error > 0.0;
    r.terms_used = evaluations;
    r.converged = doubling_ok && std::isfinite(r.value) && r.error_estimate <= opt.tol &&
                  evaluations <= std::max(opt.max_terms, static_cast<long>(kHeadTerms));
    return r;
}

std::vector<double> partial_sums(const TermGenerator& g, long count, Accumulator& acc) {
    std::vector<double> s;
    s.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        acc.add(eval(g, static_cast<double>(g.first + i)));
        s.push_back(acc.value());
    }
    return s;
}

SeriesResult sum_windows(const TermGenerator& g, const SeriesOptions& opt, AccelMethod method) {
    SeriesResult r;
    r.method = to_string(method);
    const long cap = std::clamp(opt.max_window, 8L, std::max(8L, opt.max_terms));
    Accumulator acc;
    std::vector<double> s = partial_sums(g, cap, acc);
    std::optional<Extrapolation> previous;
    Extrapolation best{s.back(), std::numeric_limits<double>::infinity(), true};
    long used = cap;
    for (long w = std::min(40L, cap);; w = std::min(2 * w, cap)) {
        const Extrapolation e = accelerate(std::span<const double>(s).first(static_cast<std::size_t>(w)), method);
        double err = e.error_estimate;
        if (previous) err = std::max(err, std::abs(e.value - previous->value));
        if (err < best.error_estimate) {
            best = {e.value, err, e.singular};
            used = w;
        }
        previous = e;
        if (err <= opt.tol || w == cap) break;
    }
    r.value = best.value;
    r.error_estimate = std::max(best.error_estimate, 4.0 * kEps * std::abs(best.value));
    r.terms_used = used;
    r.converged = std::isfinite(r.value) && r.error_estimate <= opt.tol;
    return r;
}

SeriesResult sum_cvz(const TermGenerator& g, const SeriesOptions& opt) {
    SeriesResult r;
    r.method = "euler";
    const long n = std::clamp(opt.max_window, 8L, 300L);
    const long k_full = std::min(n, 60L);
    const long k_check = (3 * k_full) / 4;
    std::vector<double> a(static_cast<std::size_t>(k_full));
    Accumulator abs_acc;
    for (long k = 0; k < k_full; ++k) {
        const double t = eval(g, static_cast<double>(g.first + k));
        abs_acc.add(t);
        a[static_cast<std::size_t>(k)] = (k % 2 == 0) ? t : -t;
    }
    const double full = cvz_alternating(a);
    const double part = cvz_alternating(std::span<const double>(a).first(static_cast<std::size_t>(k_check)));
    r.value = full;
    r.error_estimate = std::abs(full - part) + 8.0 * kEps * abs_acc.abs_sum();
    r.terms_used = k_full;
    r.converged = std::isfinite(full) && r.error_estimate <= opt.tol;
    return r;
}

bool is_one_signed(DecayClass d) { return d == DecayClass::monotone || d == DecayClass::logarithmic; }

}  // namespace

TailEstimate tail_estimate(const TermGenerator& g, long n) {
    if (n < 1) throw std::invalid_argument("tail_estimate: n must be positive");
    const double dn = static_cast<double>(n);
    switch (g.decay) {
        case DecayClass::finite: return {0.0, false};
        case DecayClass::alternating: return {std::abs(g.term(dn + 1.0)), false};
        case DecayClass::geometric: {
            const double t0 = std::abs(g.term(dn));
            const double t1 = std::abs(g.term(dn + 1.0));
            if (t0 == 0.0) return {t1, false};
            const double rho = t1 / t0;
            if (rho >= 1.0) return {std::numeric_limits<double>::infinity(), true};
            return {t0 * rho / (1.0 - rho), false};
        }
        case DecayClass::logarithmic: {
            const double t = std::abs(g.term(dn));
            return {t * dn * std::log(dn), true};
        }
        case DecayClass::monotone:
        case DecayClass::mixed: {
            const double t = std::abs(g.term(dn));
            const double t2 = std::abs(g.term(2.0 * dn));
            if (t == 0.0) return {0.0, false};
            const double p = (t2 > 0.0) ? std::log2(t / t2) : 64.0;
            if (p > 1.05) return {t * dn / (p - 1.0), g.decay == DecayClass::mixed};
            return {t * dn * std::log(dn), true};
        }
    }
    return {std::numeric_limits<double>::infinity(), true};
}

SeriesResult sum_series(const TermGenerator& g, const SeriesOptions& opt) {
    if (!(opt.tol > 0.0)) throw std::invalid_argument("sum_series: tolerance must be positive");
    if (!g.term) throw std::invalid_argument("sum_series: empty term generator");
    if (g.decay == DecayClass::finite || g.last) return sum_finite(g);

    AccelMethod method = opt.accel;
    if (method == AccelMethod::none) return sum_raw(g, opt);

    if (method == AccelMethod::automatic) {
        switch (g.decay) {
            case DecayClass::geometric: return sum_raw(g, opt);
            case DecayClass::monotone:
            case DecayClass::logarithmic: return sum_van_wijngaarden(g, opt);
            case DecayClass::alternating: {
                SeriesResult wynn = sum_windows(g, opt, AccelMethod::wynn_epsilon);
                if (wynn.converged) return wynn;
                SeriesResult euler = sum_cvz(g, opt);
                return euler.error_estimate < wynn.error_estimate ? euler : wynn;
            }
            case DecayClass::mixed:
            case DecayClass::finite: return sum_windows(g, opt, AccelMethod::wynn_epsilon);
        }
    }
    if (method == AccelMethod::euler) {
        if (is_one_signed(g.decay)) return sum_van_wijngaarden(g, opt);
        if (g.decay == DecayClass::geometric) return sum_raw(g, opt);
        return sum_cvz(g, opt);
    }
    if (g.decay == DecayClass::geometric) return sum_raw(g, opt);
    return sum_windows(g, opt, method);
}

SeriesResult sum_series_from(int m, const TermGenerator& reduced, const SeriesOptions& opt) {
    TermGenerator g = reduced;
    g.first = std::max<long>(g.first, m);
    return sum_series(g, opt);
}

}  // namespace cauchysum::transform
