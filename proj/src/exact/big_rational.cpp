#include "cauchysum/exact/big_rational.hpp"

#include <cmath>

namespace cauchysum {

BigRational::BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("BigRational: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
    q.canonicalize();
    return BigRational(q);
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

long double BigRational::to_long_double() const {
    if (is_zero()) return 0.0L;
    mpz_class num = abs(value_.get_num());
    const mpz_class& den = value_.get_den();
    // Scale so the integer quotient carries exactly 64 significant bits.
    const long shift = 64 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
                       static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    mpz_class q;
    if (shift >= 0) {
        q = num << static_cast<mp_bitcnt_t>(shift);
        q /= den;
    } else {
        mpz_class d = den << static_cast<mp_bitcnt_t>(-shift);
        q = num / d;
    }
    long extra = 0;
    while (mpz_sizeinbase(q.get_mpz_t(), 2) > 64) {
        q >>= 1;
        ++extra;
    }
    const auto mant = static_cast<long double>(mpz_get_ui(q.get_mpz_t()));
    const long double r = std::ldexp(mant, static_cast<int>(extra - shift));
    return sign() < 0 ? -r : r;
}

std::string BigRational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

BigRational pow(const BigRational& q, long e) {
    if (e < 0) {
        if (q.is_zero()) throw std::domain_error("pow: zero to a negative power");
        return BigRational(1) / pow(q, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(num, den);
}

}  // namespace cauchysum
