#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational scalars.
 *
 * Rational wraps a GMP mpq_class and keeps the value in canonical form at
 * all times: positive denominator, gcd(|numerator|, denominator) = 1.
 * Equality is structural equality of canonical forms. Every operation is a
 * pure function on immutable values; nothing here touches shared state.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulerpath {

struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("rational division by zero") {}
};

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(mpz_class(static_cast<long>(n))) {}  // NOLINT: implicit scalar embedding
    Rational(long long num, long long den) {
        if (den == 0) throw DivisionByZeroError();
        v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "a" or "a/b" in base 10. Throws on malformed input or b = 0.
    static Rational from_string(const std::string& text) {
        mpq_class v;
        try {
            v = mpq_class(text, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational literal: '" + text + "'");
        }
        if (sgn(v.get_den()) == 0) throw DivisionByZeroError();
        v.canonicalize();
        return Rational(std::move(v));
    }

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(mpq_class(f));
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rational(mpq_class(b));
    }

    /// 2^e for any integer e (negative exponents give exact fractions).
    static Rational pow2(long e) {
        mpz_class num = 1, den = 1;
        if (e >= 0) {
            mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
        } else {
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-e));
        }
        return Rational(mpq_class(num, den));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(unsigned long e) const {
        mpq_class acc = 1;
        mpq_class base = v_;
        for (unsigned long i = 0; i < e; ++i) acc *= base;
        return Rational(std::move(acc));
    }

    double to_double() const { return v_.get_d(); }

    /// Canonical "num/den" string, "num" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError();
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

}  // namespace eulerpath
