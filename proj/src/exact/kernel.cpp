#include "cauchysum/exact/kernel.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace cauchysum::exact {
namespace {

using Triangle = std::vector<std::vector<BigInt>>;

// Memoized tables. Readers take a shared lock; growth takes the unique lock
// and re-checks, so a hit always returns exactly what recomputation would.
class SequenceCache {
public:
    KernelLimits limits() const {
        std::shared_lock lock(mutex_);
        return limits_;
    }

    void set_limits(const KernelLimits& l) {
        std::unique_lock lock(mutex_);
        limits_ = l;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        stirling1_.clear();
        rstirling1_.clear();
        rstirling2_.clear();
        cauchy_.clear();
        harmonic_.clear();
        skew_.clear();
        factorial_.clear();
    }

    BigInt factorial(long n) {
        return grow_and_get(factorial_, n, [](std::vector<BigInt>& v) {
            if (v.empty()) {
                v.emplace_back(1);
            } else {
                v.push_back(v.back() * static_cast<unsigned long>(v.size()));
            }
        });
    }

    // s_r(n, .) rows, r = 0 gives the classical triangle.
    std::vector<BigInt> rstirling1_row(long r, long n) {
        return triangle_row(r == 0 ? stirling1_ : slot(rstirling1_, r), n, [r](Triangle& t) {
            if (t.empty()) {
                t.push_back({BigInt(1)});
                return;
            }
            const std::vector<BigInt>& prev = t.back();
            const long m = static_cast<long>(t.size()) - 1;  // prev is row m
            std::vector<BigInt> row(prev.size() + 1, BigInt(0));
            const BigInt factor = m + r;
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k >= 1) row[k] += prev[k - 1];
                if (k < prev.size()) row[k] -= factor * prev[k];
            }
            t.push_back(std::move(row));
        });
    }

    // S_r(k, .) rows indexed by k.
    std::vector<BigInt> rstirling2_row(long r, long k) {
        return triangle_row(slot(rstirling2_, r), k, [r](Triangle& t) {
            if (t.empty()) {
                t.push_back({BigInt(1)});
                return;
            }
            const std::vector<BigInt>& prev = t.back();
            std::vector<BigInt> row(prev.size() + 1, BigInt(0));
            for (std::size_t n = 0; n < row.size(); ++n) {
                if (n >= 1) row[n] += prev[n - 1];
                if (n < prev.size()) row[n] += BigInt(static_cast<long>(n) + r) * prev[n];
            }
            t.push_back(std::move(row));
        });
    }

    BigRational harmonic(long n, long m) {
        auto& table = slot(harmonic_, m);
        return grow_and_get(table, n, [m](std::vector<BigRational>& v) {
            if (v.empty()) {
                v.emplace_back(0);
                return;
            }
            const long k = static_cast<long>(v.size());
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
            v.push_back(v.back() + BigRational(BigInt(1), den));
        });
    }

    BigRational skew_harmonic(long n) {
        return grow_and_get(skew_, n, [](std::vector<BigRational>& v) {
            if (v.empty()) {
                v.emplace_back(0);
                return;
            }
            const long k = static_cast<long>(v.size());
            const BigRational term(BigInt(1), BigInt(k));
            v.push_back(k % 2 == 1 ? v.back() + term : v.back() - term);
        });
    }

    // c_n / n! via the generating-function recurrence
    // sum_{k=0}^{n} G_k (-1)^{n-k} / (n-k+1) = [n == 0].
    BigRational cauchy_ratio(long n) {
        return grow_and_get(cauchy_, n, [](std::vector<BigRational>& g) {
            const long m = static_cast<long>(g.size());
            if (m == 0) {
                g.emplace_back(1);
                return;
            }
            BigRational acc(0);
            for (long k = 0; k < m; ++k) {
                const BigRational w(BigInt((m - k) % 2 == 0 ? 1 : -1), BigInt(m - k + 1));
                acc += g[static_cast<std::size_t>(k)] * w;
            }
            g.push_back(-acc);
        });
    }

private:
    // std::map references stay valid across insertions, so the slot can be
    // used after the lock is released.
    template <class Map>
    typename Map::mapped_type& slot(Map& map, long key) {
        {
            std::shared_lock lock(mutex_);
            auto it = map.find(key);
            if (it != map.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        return map[key];
    }

    template <class T, class Grow>
    T grow_and_get(std::vector<T>& table, long n, Grow grow) {
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<long>(table.size())) return table[static_cast<std::size_t>(n)];
        }
        std::unique_lock lock(mutex_);
        while (static_cast<long>(table.size()) <= n) grow(table);
        return table[static_cast<std::size_t>(n)];
    }

    template <class Grow>
    std::vector<BigInt> triangle_row(Triangle& t, long n, Grow grow) {
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<long>(t.size())) return t[static_cast<std::size_t>(n)];
        }
        std::unique_lock lock(mutex_);
        while (static_cast<long>(t.size()) <= n) grow(t);
        return t[static_cast<std::size_t>(n)];
    }

    mutable std::shared_mutex mutex_;
    KernelLimits limits_;
    Triangle stirling1_;
    std::map<long, Triangle> rstirling1_;
    std::map<long, Triangle> rstirling2_;
    std::vector<BigRational> cauchy_;
    std::map<long, std::vector<BigRational>> harmonic_;
    std::vector<BigRational> skew_;
    std::vector<BigInt> factorial_;
};

SequenceCache& cache() {
    static SequenceCache instance;
    return instance;
}

void require_nonnegative(long v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

void check_index(long n, const char* family) {
    const long cap = cache().limits().max_index;
    if (n > cap) {
        throw IndexBoundError(std::string(family) + ": index " + std::to_string(n) +
                              " exceeds configured bound " + std::to_string(cap));
    }
}

void check_triangle(long n, const char* family) {
    const long cap = cache().limits().max_triangle;
    if (n > cap) {
        throw IndexBoundError(std::string(family) + ": row " + std::to_string(n) +
                              " exceeds configured triangle bound " + std::to_string(cap));
    }
}

}  // namespace

KernelLimits limits() { return cache().limits(); }
void set_limits(const KernelLimits& l) { cache().set_limits(l); }
void clear_cache() { cache().clear(); }

BigInt binomial(long n, long k) {
    require_nonnegative(n, "binomial: n");
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    require_nonnegative(n, "factorial: n");
    check_index(n, "factorial");
    return cache().factorial(n);
}

std::vector<BigInt> stirling1_row(long n) {
    require_nonnegative(n, "stirling1: n");
    check_triangle(n, "stirling1");
    return cache().rstirling1_row(0, n);
}

BigInt stirling1(long n, long k) {
    require_nonnegative(n, "stirling1: n");
    if (k < 0 || k > n) return BigInt(0);
    return stirling1_row(n)[static_cast<std::size_t>(k)];
}

BigInt rstirling1(long r, long n, long k) {
    require_nonnegative(r, "rstirling1: r");
    require_nonnegative(n, "rstirling1: n");
    if (k < 0 || k > n) return BigInt(0);
    check_triangle(n, "rstirling1");
    check_triangle(r, "rstirling1");
    return cache().rstirling1_row(r, n)[static_cast<std::size_t>(k)];
}

BigInt rstirling2(long r, long k, long n) {
    require_nonnegative(r, "rstirling2: r");
    require_nonnegative(k, "rstirling2: k");
    if (n < 0 || n > k) return BigInt(0);
    check_triangle(k, "rstirling2");
    check_triangle(r, "rstirling2");
    return cache().rstirling2_row(r, k)[static_cast<std::size_t>(n)];
}

BigInt stirling2(long n, long k) { return rstirling2(0, n, k); }

BigRational cauchy(long n) {
    require_nonnegative(n, "cauchy: n");
    check_index(n, "cauchy");
    if (n <= cache().limits().max_triangle) {
        const std::vector<BigInt> row = stirling1_row(n);
        BigRational acc(0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            acc += BigRational(row[k], BigInt(static_cast<long>(k) + 1));
        }
        return acc;
    }
    return cache().cauchy_ratio(n) * BigRational(factorial(n));
}

BigRational cauchy_over_factorial(long n) {
    require_nonnegative(n, "cauchy_over_factorial: n");
    check_index(n, "cauchy");
    if (n <= cache().limits().max_triangle) return cauchy(n) / BigRational(factorial(n));
    return cache().cauchy_ratio(n);
}

BigRational cauchy2_at_negative(long n, long r) {
    require_nonnegative(n, "cauchy2_at_negative: n");
    require_nonnegative(r, "cauchy2_at_negative: r");
    BigRational acc(0);
    for (long k = 0; k <= n; ++k) {
        acc += sign_power(k) * BigRational(rstirling1(r, n, k), BigInt(k + 1));
    }
    return acc;
}

BigRational harmonic(long n, long m) {
    require_nonnegative(n, "harmonic: n");
    if (m < 1) throw std::invalid_argument("harmonic: order m must be >= 1");
    check_index(n, "harmonic");
    return cache().harmonic(n, m);
}

BigRational skew_harmonic(long n) {
    require_nonnegative(n, "skew_harmonic: n");
    check_index(n, "skew_harmonic");
    return cache().skew_harmonic(n);
}

BigRational hyperharmonic(long n, long r) {
    require_nonnegative(n, "hyperharmonic: n");
    if (r < 1) throw std::invalid_argument("hyperharmonic: r must be >= 1");
    return BigRational(binomial(n + r - 1, r - 1)) * (harmonic(n + r - 1) - harmonic(r - 1));
}

BigRational stirling2_negative(long n, long r) {
    require_nonnegative(n, "stirling2_negative: n");
    if (r < 1) throw std::invalid_argument("stirling2_negative: r must be >= 1");
    BigRational acc(0);
    for (long j = 1; j <= r; ++j) {
        BigInt jn;
        mpz_ui_pow_ui(jn.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
        acc += sign_power(j) * BigRational(binomial(r, j), jn);
    }
    return sign_power(r) * acc / BigRational(factorial(r));
}

BigRational bell_complete(std::span<const BigRational> t) {
    const long m = static_cast<long>(t.size());
    std::vector<BigRational> y(static_cast<std::size_t>(m) + 1);
    y[0] = BigRational(1);
    for (long k = 0; k < m; ++k) {
        BigRational acc(0);
        for (long i = 0; i <= k; ++i) {
            acc += BigRational(binomial(k, i)) * y[static_cast<std::size_t>(k - i)] *
                   t[static_cast<std::size_t>(i)];
        }
        y[static_cast<std::size_t>(k) + 1] = acc;
    }
    return y.back();
}

BigRational bell_complete(long m, std::span<const BigRational> t) {
    if (m < 0 || static_cast<long>(t.size()) != m) {
        throw std::invalid_argument("bell_complete: expected " + std::to_string(m) + " arguments, got " +
                                    std::to_string(t.size()));
    }
    return bell_complete(t);
}

BigRational rising(const BigRational& x, long len) {
    require_nonnegative(len, "rising: length");
    BigRational acc(1);
    for (long i = 0; i < len; ++i) acc *= x + BigRational(i);
    return acc;
}

}  // namespace cauchysum::exact
