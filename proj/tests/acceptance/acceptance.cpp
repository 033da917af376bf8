// Acceptance suite: one PASS/FAIL line per criterion. Reference values are
// computed here from elementary functions and the oracles, never taken from
// the registry's own right-hand sides.

#include "cauchysum/analytic/power_series.hpp"
#include "cauchysum/analytic/quadrature.hpp"
#include "cauchysum/analytic/special_functions.hpp"
#include "cauchysum/cli/report_io.hpp"
#include "cauchysum/exact/kernel.hpp"
#include "cauchysum/identities/registry.hpp"
#include "cauchysum/identities/verify.hpp"
#include "cauchysum/transform/binomial_transform.hpp"
#include "oracles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace an = cauchysum::analytic;
namespace ex = cauchysum::exact;
namespace id = cauchysum::identities;
namespace tr = cauchysum::transform;
using cauchysum::BigInt;
using cauchysum::BigRational;

namespace {

// Pinned tolerances.
constexpr double kExactSuiteSeconds = 10.0;
constexpr double kB11SeriesTol = 1e-6;
constexpr double kB11QuadratureTol = 1e-8;
constexpr double kB13Tol = 1e-6;
constexpr double kB14B15Tol = 1e-5;
constexpr double kB17Tol = 1e-8;
constexpr double kL2Tol = 1e-8;
constexpr double kL6Tol = 1e-6;
constexpr double kL5Tol = 1e-6;
constexpr double kL19L20Tol = 1e-8;
constexpr double kFinalTol = 1e-6;
constexpr double kDigammaTol = 1e-12;
constexpr double kTaylorTol = 1e-6;
constexpr double kFullRunSeconds = 120.0;

constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kB11Constant = 0.6703837612;
constexpr double kFinalConstant = 0.3606201929;

struct Outcome {
    bool passed = true;
    std::string summary;
    std::vector<std::string> details;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

// Relative-or-absolute closeness: |a - b| <= tol * max(1, |b|).
bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

double series_value(const std::string& name, const id::ParamSet& p = {}) {
    const auto* rec = id::find_identity(name);
    if (rec == nullptr) throw std::runtime_error("missing identity " + name);
    return id::verify(*rec, p).lhs;
}

id::ParamSet params(std::initializer_list<std::pair<const char*, long>> kv) {
    id::ParamSet p;
    for (const auto& [k, v] : kv) p[k] = BigRational(v);
    return p;
}

// Compares one computed value against a reference and records a detail line on mismatch.
void expect_close(Outcome& o, const std::string& label, double computed, double reference, double tol) {
    if (close(computed, reference, tol)) return;
    o.passed = false;
    o.details.push_back(label + ": computed " + g17(computed) + ", expected " + g17(reference) + ", diff " +
                        fmt("%.3g", std::abs(computed - reference)) + " > tol " + fmt("%.0e", tol));
}

Outcome exact_suite() {
    Outcome o;
    id::RunConfig c;
    c.filter = "exact-finite";
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = id::run_all(c);
    const double secs = seconds_since(t0);
    std::size_t good = 0;
    for (const auto& r : reports) {
        if (r.status == id::Status::pass && r.abs_err_text == "0") {
            ++good;
        } else {
            o.passed = false;
            if (o.details.size() < 10) o.details.push_back(r.id + " [" + id::format_params(r.params) + "] " + id::to_string(r.status));
        }
    }
    if (reports.empty() || secs >= kExactSuiteSeconds) o.passed = false;
    o.summary = std::to_string(good) + "/" + std::to_string(reports.size()) + " exact points with abs_err 0 in " + fmt("%.2f", secs) +
                " s (limit " + fmt("%.0f", kExactSuiteSeconds) + " s)";
    return o;
}

Outcome b11() {
    Outcome o;
    const double series = series_value("SER-B11");
    const auto quad = an::quadrature([](double x) { return std::exp(std::lgamma(2.0 * x + 1.0) - 2.0 * std::lgamma(x + 1.0) - 2.0 * x * std::log(2.0)); }, 1e-12);
    expect_close(o, "series", series, kB11Constant, kB11SeriesTol);
    expect_close(o, "quadrature", quad.value, kB11Constant, kB11QuadratureTol);
    o.summary = "series " + g17(series) + ", quadrature " + g17(quad.value) + " vs 0.6703837612";
    return o;
}

Outcome b13_b15() {
    Outcome o;
    const double l2 = std::log(2.0), pi = an::kPi;
    const double b13 = series_value("SER-B13"), b14 = series_value("SER-B14"), b15 = series_value("SER-B15");
    expect_close(o, "B13", b13, std::log(4.0), kB13Tol);
    expect_close(o, "B14", b14, pi * pi / 6.0 + 2.0 * l2 * l2, kB14B15Tol);
    expect_close(o, "B15", b15, 4.0 * kZeta3 + 8.0 / 3.0 * l2 * l2 * l2 + 2.0 * pi * pi / 3.0 * l2, kB14B15Tol);
    o.summary = "ln 4, pi^2/6 + 2 ln^2 2, 4 zeta(3) + (8/3) ln^3 2 + (2 pi^2/3) ln 2";
    return o;
}

Outcome b17() {
    Outcome o;
    const double series = series_value("SER-B17"), reference = oracle::ein(-std::log(2.0));
    expect_close(o, "B17", series, reference, kB17Tol);
    o.summary = "series " + g17(series) + " vs Ein(-ln 2) " + g17(reference);
    return o;
}

Outcome l2_l6() {
    Outcome o;
    expect_close(o, "L2 r=2", series_value("SER-L2-COR"), std::log(3.0) - std::log(2.0) + 0.5, kL2Tol);
    for (long r = 1; r <= 4; ++r) {
        const double h = oracle::harmonic(r).to_double(), h2 = oracle::harmonic(r, 2).to_double();
        expect_close(o, "L6 m=1 r=" + std::to_string(r), series_value("SER-EX8-COR", params({{"m", 1}, {"r", r}})), 1.0 + h, kL6Tol);
        expect_close(o, "L6 m=2 r=" + std::to_string(r), series_value("SER-EX8-COR", params({{"m", 2}, {"r", r}})), 1.0 + h + (h * h + h2) / 2.0, kL6Tol);
    }
    o.summary = "ln 3 - ln 2 + 1/2; 1 + H_r and 1 + H_r + (H_r^2 + H_r^(2))/2 for r <= 4";
    return o;
}

Outcome l5() {
    Outcome o;
    const double z2 = an::kPi * an::kPi / 6.0, z4 = std::pow(an::kPi, 4) / 90.0;
    for (long r = 1; r <= 4; ++r) {
        const double h = oracle::harmonic(r).to_double(), h2 = oracle::harmonic(r, 2).to_double();
        expect_close(o, "m=2 r=" + std::to_string(r), series_value("SER-L5-COR", params({{"m", 2}, {"r", r}})), h * z2 + kZeta3, kL5Tol);
        expect_close(o, "m=3 r=" + std::to_string(r), series_value("SER-L5-COR", params({{"m", 3}, {"r", r}})),
                     (h * h + h2) * z2 + 2.0 * h * kZeta3 + 2.0 * z4, kL5Tol);
    }
    o.summary = "H_r zeta(2) + zeta(3) and (H_r^2 + H_r^(2)) zeta(2) + 2 H_r zeta(3) + pi^4/45 for r <= 4";
    return o;
}

Outcome l19_l20() {
    Outcome o;
    for (long r = 2; r <= 5; ++r)
        expect_close(o, "L19 r=" + std::to_string(r), series_value("SER-L19", params({{"r", r}})), std::log(r / (r - 1.0)) - 1.0 / r, kL19L20Tol);
    // The stated value (m+1)/(r-1)^{m+2}; m = 1, 2 are the corollaries 2/(r-1)^3 and 3/(r-1)^4.
    double worst_shifted = 0.0;
    int mismatches = 0;
    for (long m = 1; m <= 3; ++m)
        for (long r = 2; r <= 5; ++r) {
            const double v = series_value("SER-L20", params({{"m", m}, {"r", r}}));
            const double stated = (m + 1.0) / std::pow(r - 1.0, m + 2.0);
            const std::size_t before = o.details.size();
            expect_close(o, "L20 m=" + std::to_string(m) + " r=" + std::to_string(r), v, stated, kL19L20Tol);
            if (o.details.size() > before) ++mismatches;
            worst_shifted = std::max(worst_shifted, std::abs(v - m / std::pow(r - 1.0, m + 1.0)));
        }
    o.summary = "L19 at r = 2..5; L20 as stated, (m+1)/(r-1)^{m+2}, at m = 1..3, r = 2..5";
    if (mismatches > 0)
        o.details.push_back(std::to_string(mismatches) + "/12 L20 points miss the stated value; all match m/(r-1)^{m+1} (max diff " +
                            fmt("%.2g", worst_shifted) + ")");
    return o;
}

Outcome final_constant() {
    Outcome o;
    const double series = series_value("SER-FINAL");
    const auto quad = an::quadrature([](double x) { return (an::digamma(x + 1.0) + an::kEulerGamma) / (x + 1.0); }, 1e-12);
    expect_close(o, "series", series, kFinalConstant, kFinalTol);
    expect_close(o, "quadrature", quad.value, kFinalConstant, kFinalTol);
    expect_close(o, "series vs quadrature", series, quad.value, kFinalTol);
    o.summary = "series " + g17(series) + ", quadrature " + g17(quad.value) + " vs 0.3606201929";
    return o;
}

BigRational C(long n, long k) { return BigRational(oracle::binomial(n, k)); }
BigRational fact(long n) { return BigRational(oracle::factorial(n)); }
BigRational up(const BigRational& x, long r) {
    BigRational acc(1);
    for (long i = 1; i <= r; ++i) acc *= x + BigRational(i);
    return acc;
}

Outcome properties() {
    Outcome o;
    // (i)
    for (long n = 0; n <= 25; ++n) {
        BigRational by_stirling(0);
        for (long k = 0; k <= n; ++k) by_stirling += BigRational(ex::stirling1(n, k)) / BigRational(k + 1);
        if (by_stirling != oracle::cauchy(n) || ex::cauchy(n) != by_stirling) {
            o.passed = false;
            o.details.push_back("(i) Cauchy number mismatch at n=" + std::to_string(n));
        }
    }
    // (ii)
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9), rdist(0, 3), len(1, 10);
    int round_trip_failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const long r = rdist(rng), size = len(rng);
        std::vector<BigRational> a, b(static_cast<std::size_t>(size), BigRational(0)), back(static_cast<std::size_t>(size), BigRational(0));
        for (long i = 0; i < size; ++i) a.push_back(BigRational(BigInt(num(rng)), BigInt(den(rng))));
        for (long n = 0; n < size; ++n)
            for (long k = 0; k <= n; ++k) b[static_cast<std::size_t>(n)] += BigRational(ex::rstirling1(r, n, k)) * a[static_cast<std::size_t>(k)];
        for (long n = 0; n < size; ++n)
            for (long k = 0; k <= n; ++k) back[static_cast<std::size_t>(n)] += BigRational(ex::rstirling2(r, n, k)) * b[static_cast<std::size_t>(k)];
        if (back != a) ++round_trip_failures;
    }
    if (round_trip_failures > 0) {
        o.passed = false;
        o.details.push_back("(ii) " + std::to_string(round_trip_failures) + "/50 r-Stirling round trips failed");
    }
    // (iii)
    const std::vector<BigRational> alphas{BigRational(BigInt(1), BigInt(4)), BigRational(BigInt(1), BigInt(3)), BigRational(BigInt(1), BigInt(2)),
                                          BigRational(BigInt(3), BigInt(4))};
    int bad_b7a = 0, bad_b10 = 0, bad_4 = 0, bad_9 = 0, bad_8 = 0, bad_8_shifted = 0, points_8 = 0;
    for (long n = 0; n <= 15; ++n) {
        for (const auto& a : alphas)
            for (long q = 0; q <= n; ++q)
                if (tr::alternating_binomial_sum_exact([&](long k) { return C(k, q) * cauchysum::pow(a, k); }, n) !=
                    cauchysum::pow(-a, q) * cauchysum::pow(BigRational(1) - a, n - q) * C(n, q))
                    ++bad_b7a;
        if (tr::alternating_binomial_sum_exact([](long k) { return C(2 * k, k) / cauchysum::pow(BigRational(4), k); }, n) !=
            C(2 * n, n) / cauchysum::pow(BigRational(4), n))
            ++bad_b10;
        for (long r = 1; r <= 5; ++r) {
            if (tr::alternating_binomial_sum_exact([r](long k) { return BigRational(1) / (BigRational(k + 1) * up(BigRational(k), r)); }, n) !=
                oracle::hyperharmonic(n + 1, r) / up(BigRational(n), r))
                ++bad_4;
            if (tr::alternating_binomial_sum_exact([r](long k) { return oracle::harmonic(k) / up(BigRational(k), r); }, n) !=
                -oracle::hyperharmonic(n, r) / up(BigRational(n), r))
                ++bad_9;
            for (long l = 0; l <= 4; ++l) {
                ++points_8;
                const BigRational sum = tr::alternating_binomial_sum_exact([r, l](long k) { return BigRational(1) / up(BigRational(k + l), r); }, n);
                if (sum != BigRational(1) / (fact(r - 1) * BigRational(n + r) * C(n + l, l))) ++bad_8;
                if (sum != BigRational(1) / (fact(r - 1) * BigRational(n + r) * C(n + r + l, l))) ++bad_8_shifted;
            }
        }
    }
    if (bad_b7a + bad_b10 + bad_4 + bad_9 > 0) {
        o.passed = false;
        o.details.push_back("(iii) mismatches: B7a " + std::to_string(bad_b7a) + ", B10 " + std::to_string(bad_b10) + ", (4) " +
                            std::to_string(bad_4) + ", (9) " + std::to_string(bad_9));
    }
    if (bad_8 > 0) {
        o.passed = false;
        o.details.push_back("(iii) (8) as stated, 1/((r-1)!(n+r)C(n+l,l)): " + std::to_string(bad_8) + "/" + std::to_string(points_8) +
                            " points fail (every l >= 1); with C(n+r+l,l) " + std::to_string(bad_8_shifted) + " fail");
    }
    // (iv)
    for (long n = 0; n <= 20; ++n)
        if (std::abs(an::digamma(n + 1.0) + an::kEulerGamma - oracle::harmonic(n).to_double()) > kDigammaTol) {
            o.passed = false;
            o.details.push_back("(iv) digamma mismatch at n=" + std::to_string(n));
        }
    // (v)
    const auto numeric = oracle::taylor_by_chebyshev(
        [](long double x) { return std::exp(std::lgamma(2.0L * x + 1.0L) - 2.0L * std::lgamma(x + 1.0L) - 2.0L * x * std::log(2.0L)); }, 0.25L, 26, 5);
    const auto series = an::ps_central_binomial(5);
    for (int k = 0; k <= 5; ++k)
        if (std::abs(series[k] - static_cast<double>(numeric[static_cast<std::size_t>(k)])) > kTaylorTol) {
            o.passed = false;
            o.details.push_back("(v) Taylor coefficient " + std::to_string(k) + " mismatch");
        }
    o.summary = "(i) L1 = B1 for n <= 25, (ii) 50 round trips, (iii) B7a/B10/(4)/(8)/(9) for n <= 15, (iv) digamma, (v) Taylor coefficients";
    return o;
}

Outcome paper_claimed() {
    Outcome o;
    id::RunConfig c;
    c.filter = "paper-claimed";
    const auto reports = id::run_all(c);
    int flagged = 0, passed = 0;
    std::set<std::string> required_seen;
    for (const auto& r : reports) {
        if (r.status == id::Status::flagged) ++flagged;
        else if (r.status == id::Status::pass) ++passed;
        else {
            o.passed = false;
            o.details.push_back(r.id + " [" + id::format_params(r.params) + "] " + id::to_string(r.status));
        }
        if (r.id == "SER-EX10-COR" || r.id == "SER-L11") {
            required_seen.insert(r.id);
            const std::string text = cauchysum::cli::to_plain(r);
            if (r.status != id::Status::flagged || text.find("computed") == std::string::npos || text.find("claimed") == std::string::npos) {
                o.passed = false;
                o.details.push_back(r.id + " [" + id::format_params(r.params) + "] not reported as computed vs claimed");
            }
        }
    }
    if (required_seen.size() != 2) {
        o.passed = false;
        o.details.push_back("SER-EX10-COR or SER-L11 missing from the run");
    }
    o.summary = std::to_string(reports.size()) + " paper-claimed points: " + std::to_string(flagged) + " FLAGGED, " + std::to_string(passed) +
                " PASS, none FAIL; SER-EX10-COR and SER-L11 print computed vs claimed";
    return o;
}

Outcome full_run() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = id::run_all({});
    const double secs = seconds_since(t0);
    const auto s = cauchysum::cli::summarize(reports);
    if (secs > kFullRunSeconds || cauchysum::cli::exit_code(s) != 0) o.passed = false;
    o.summary = fmt("%.2f", secs) + " s (limit " + fmt("%.0f", kFullRunSeconds) + " s); " + cauchysum::cli::summary_line(s);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expected_failures;
    app.add_option("--expect-fail", expected_failures, "criteria whose failure is known and analysed")->delimiter(',');
    CLI11_PARSE(app, argc, argv);
    const std::set<int> expected(expected_failures.begin(), expected_failures.end());

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact suite", exact_suite},
        {"B11 series and quadrature", b11},
        {"B13, B14, B15 constants", b13_b15},
        {"B17 against Ein(-ln 2)", b17},
        {"L2 at r = 2 and L6 corollaries", l2_l6},
        {"L5 corollaries", l5},
        {"L19 and L20 closed forms", l19_l20},
        {"SER-FINAL three-way agreement", final_constant},
        {"property suite", properties},
        {"paper-claimed entries FLAGGED", paper_claimed},
        {"full run wall time", full_run},
    };

    int failed = 0, unexpected = 0;
    std::string failed_list;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.passed = false;
            o.summary = std::string("exception: ") + e.what();
        }
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << number << ". " << criteria[i].first << ": " << o.summary << '\n';
        for (const auto& d : o.details) std::cout << "         " << d << '\n';
        const bool anticipated = expected.count(number) > 0;
        if (!o.passed) {
            ++failed;
            failed_list += (failed_list.empty() ? "" : ",") + std::to_string(number);
        }
        if (o.passed == anticipated) ++unexpected;
    }
    std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed";
    if (!failed_list.empty()) std::cout << "; failed: " << failed_list;
    if (!expected.empty()) std::cout << (unexpected == 0 ? "; matches expected failures" : "; does not match expected failures");
    std::cout << '\n';
    return unexpected == 0 ? 0 : 1;
}
