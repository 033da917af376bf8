#ifndef CAUCHYSUM_EXACT_BIG_RATIONAL_HPP
#define CAUCHYSUM_EXACT_BIG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cauchysum {

using BigInt = mpz_class;

/// Exact rational number backed by GMP. Every value is kept in lowest terms
/// with a positive denominator, so structural equality is value equality.
class BigRational {
public:
    BigRational() = default;
    BigRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    BigRational(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q".
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

    /// "p/q", or "p" when the denominator is one.
    std::string to_string() const;

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

BigRational abs(const BigRational& q);

/// q^e for any integer e; throws std::domain_error for 0^negative.
BigRational pow(const BigRational& q, long e);

inline BigRational sign_power(long e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }

}  // namespace cauchysum

#endif
