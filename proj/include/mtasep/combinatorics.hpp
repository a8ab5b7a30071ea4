#pragma once

// Exact integer and rational arithmetic used by every counting routine.
//
// BigInt is GMP's mpz_class. Rational wraps mpq_class and keeps the value in
// lowest terms with a positive denominator at all times, so equality is plain
// structural equality of numerator and denominator.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "mtasep/error.hpp"

namespace mtasep {

using BigInt = mpz_class;

std::string toString(const BigInt& value);

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& numerator, const BigInt& denominator);
    Rational(long numerator, long denominator);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] double toDouble() const { return value_.get_d(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool isZero() const { return sign() == 0; }

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string toString() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value);

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

private:
    mpq_class value_;
};

/// C(n, k). Zero whenever k < 0, k > n or n < 0, so that summation identities
/// may run over all integers.
BigInt binom(long n, long k);

/// (1/e) C(e, f+1) C(e, f). Rejects e <= 0.
BigInt narayana(long e, long f);

/// C(2e, e) / (e + 1).
BigInt catalan(long e);

/// Exact quotient; throws InternalError when `divisor` does not divide `dividend`.
BigInt exactDivide(const BigInt& dividend, const BigInt& divisor, const char* context);

}  // namespace mtasep
