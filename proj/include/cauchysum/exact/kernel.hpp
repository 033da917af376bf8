#ifndef CAUCHYSUM_EXACT_KERNEL_HPP
#define CAUCHYSUM_EXACT_KERNEL_HPP

#include "cauchysum/exact/big_rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Exact special-number families. Every function here is pure; results for
// triangles and prefix sums are memoized in a process-wide cache that is
// safe for concurrent readers.
//
// r-Stirling numbers use the shifted indexing in which s_r(n,k) is the
// coefficient of x^k in (x-r)(x-r-1)...(x-r-n+1) and S_r(k,n) is the
// coefficient of t^k/k! in (e^t-1)^n e^{rt}/n!. With this indexing
// s_0 = s, s_1(n,k) = s(n+1,k+1) and s_r(0,0) = S_r(0,0) = 1.

namespace cauchysum::exact {

struct KernelLimits {
    long max_index = 10000;    // 1-D families (harmonic, Cauchy, factorial, ...)
    long max_triangle = 500;   // Stirling-type triangles
};

/// Thrown when an index exceeds the configured cache bound.
class IndexBoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

KernelLimits limits();
void set_limits(const KernelLimits& l);

/// Drops every memoized table (mainly for tests).
void clear_cache();

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Signed Stirling numbers of the first kind, s(n,k).
BigInt stirling1(long n, long k);
/// Row n of s(n,k) for k = 0..n.
std::vector<BigInt> stirling1_row(long n);
/// Stirling numbers of the second kind, S(n,k).
BigInt stirling2(long n, long k);

BigInt rstirling1(long r, long n, long k);
BigInt rstirling2(long r, long k, long n);

/// Cauchy number of the first kind, c_n = sum_k s(n,k)/(k+1).
BigRational cauchy(long n);
/// c_n / n!, the Bernoulli numbers of the second kind.
BigRational cauchy_over_factorial(long n);
/// Cauchy polynomial of the second kind at -r.
BigRational cauchy2_at_negative(long n, long r);

BigRational harmonic(long n, long m = 1);
BigRational skew_harmonic(long n);
BigRational hyperharmonic(long n, long r);
/// S(-n, r) for n >= 0, r >= 1.
BigRational stirling2_negative(long n, long r);

/// Complete exponential Bell polynomial Y_m(t_1, ..., t_m) with m = t.size().
BigRational bell_complete(std::span<const BigRational> t);
/// Same, with an explicit degree that must equal t.size().
BigRational bell_complete(long m, std::span<const BigRational> t);

/// Rising factorial x (x+1) ... (x+len-1); 1 for len = 0.
BigRational rising(const BigRational& x, long len);

}  // namespace cauchysum::exact

#endif
