#include "cauchysum/cli/tables.hpp"

#include "cauchysum/exact/kernel.hpp"

#include <stdexcept>

namespace cauchysum::cli {

const std::vector<std::string>& table_families() {
    static const std::vector<std::string> names = {"cauchy",        "stirling1",     "rstirling1",
                                                   "rstirling2",    "harmonic",      "skew-harmonic",
                                                   "hyperharmonic", "stirling2neg",  "bell-at-harmonic"};
    return names;
}

namespace {

long bound(const std::optional<long>& v, long fallback, long lo, const char* name) {
    const long x = v.value_or(fallback);
    if (x < lo) throw std::invalid_argument(std::string("--") + name + " must be >= " + std::to_string(lo));
    return x;
}

void check_cap(long n, bool triangle) {
    const auto lim = exact::limits();
    const long cap = triangle ? lim.max_triangle : lim.max_index;
    if (n > cap) throw exact::IndexBoundError("index " + std::to_string(n) + " exceeds kernel cap " + std::to_string(cap));
}

}  // namespace

Table make_table(const std::string& family, const TableBounds& b) {
    Table t;
    t.family = family;
    if (family == "cauchy") {
        const long n = bound(b.n, 10, 0, "n");
        check_cap(n, false);
        t.index_names = {"n"};
        for (long i = 0; i <= n; ++i) t.rows.push_back({{i}, exact::cauchy(i)});
    } else if (family == "harmonic" || family == "skew-harmonic") {
        const long n = bound(b.n, 10, 1, "n");
        const long m = bound(b.m, 1, 1, "m");
        check_cap(n, false);
        t.index_names = {"n"};
        for (long i = 1; i <= n; ++i) {
            t.rows.push_back({{i}, family == "harmonic" ? exact::harmonic(i, m) : exact::skew_harmonic(i)});
        }
    } else if (family == "hyperharmonic") {
        const long n = bound(b.n, 10, 1, "n");
        const long r = bound(b.r, 1, 1, "r");
        check_cap(n + r, false);
        t.index_names = {"n"};
        for (long i = 1; i <= n; ++i) t.rows.push_back({{i}, exact::hyperharmonic(i, r)});
    } else if (family == "stirling1" || family == "rstirling1") {
        const long n = bound(b.n, 8, 0, "n");
        const long r = family == "stirling1" ? 0 : bound(b.r, 1, 0, "r");
        check_cap(n + r, true);
        t.index_names = {"n", "k"};
        for (long i = 0; i <= n; ++i) {
            for (long k = 0; k <= i; ++k) {
                t.rows.push_back({{i, k}, BigRational(r == 0 ? exact::stirling1(i, k) : exact::rstirling1(r, i, k))});
            }
        }
    } else if (family == "rstirling2") {
        const long n = bound(b.n, 8, 0, "n");
        const long r = bound(b.r, 1, 0, "r");
        check_cap(n + r, true);
        t.index_names = {"k", "n"};
        for (long k = 0; k <= n; ++k) {
            for (long j = 0; j <= k; ++j) t.rows.push_back({{k, j}, BigRational(exact::rstirling2(r, k, j))});
        }
    } else if (family == "stirling2neg") {
        const long n = bound(b.n, 4, 0, "n");
        const long r = bound(b.r, 5, 1, "r");
        check_cap(r, false);
        t.index_names = {"n", "r"};
        for (long i = 0; i <= n; ++i) {
            for (long j = 1; j <= r; ++j) t.rows.push_back({{i, j}, exact::stirling2_negative(i, j)});
        }
    } else if (family == "bell-at-harmonic") {
        // Y_m(-0! H_p, -1! H_p^(2), ..., -(m-1)! H_p^(m)) for p = 0..n, m = 0..M.
        const long n = bound(b.n, 6, 0, "n");
        const long mm = bound(b.m, 4, 0, "m");
        check_cap(n, false);
        t.index_names = {"p", "m"};
        for (long p = 0; p <= n; ++p) {
            for (long m = 0; m <= mm; ++m) {
                std::vector<BigRational> args;
                for (long i = 1; i <= m; ++i) args.push_back(-BigRational(exact::factorial(i - 1)) * exact::harmonic(p, i));
                t.rows.push_back({{p, m}, exact::bell_complete(m, args)});
            }
        }
    } else {
        throw std::invalid_argument("unknown table family '" + family + "'");
    }
    return t;
}

}  // namespace cauchysum::cli
