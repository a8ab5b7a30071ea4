#include "mtasep/combinatorics.hpp"

#include <ostream>

namespace mtasep {

std::string toString(const BigInt& value) { return value.get_str(); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw InvalidArgument("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator) : Rational(BigInt(numerator), BigInt(denominator)) {}

std::string Rational::toString() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.isZero()) {
        throw InvalidArgument("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& value) {
    Rational result;
    result.value_ = -value.value_;
    return result;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.toString(); }

BigInt binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

BigInt exactDivide(const BigInt& dividend, const BigInt& divisor, const char* context) {
    if (divisor == 0 || !mpz_divisible_p(dividend.get_mpz_t(), divisor.get_mpz_t())) {
        throw InternalError(std::string(context) + ": inexact division " + dividend.get_str() + " / " +
                            divisor.get_str());
    }
    BigInt quotient;
    mpz_divexact(quotient.get_mpz_t(), dividend.get_mpz_t(), divisor.get_mpz_t());
    return quotient;
}

BigInt narayana(long e, long f) {
    if (e <= 0) {
        throw InvalidArgument("narayana: e must be >= 1");
    }
    return exactDivide(binom(e, f + 1) * binom(e, f), BigInt(e), "narayana");
}

BigInt catalan(long e) { return exactDivide(binom(2 * e, e), BigInt(e + 1), "catalan"); }

}  // namespace mtasep
