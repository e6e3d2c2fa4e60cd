#pragma once

/// Exact rational numbers over BigInt, wrapping GMP's mpq_t.
///
/// Values are always kept canonical: gcd(numerator, denominator) = 1 and the
/// denominator is positive.  GMP re-normalizes after every operation, which is
/// what keeps EGF coefficient denominators at n! instead of blowing up.

#include <gmp.h>

#include <string>

#include "bellcong/bigint.hpp"
#include "bellcong/errors.hpp"

namespace bellcong {

class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw ZeroInputError("Rational: zero denominator");
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    explicit Rational(const BigInt& num) {
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
    }

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroInputError("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    BigInt numerator() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(v_));
        return r;
    }
    BigInt denominator() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(v_));
        return r;
    }

    /// The value as an exact integer; throws InexactDivisionError when the
    /// denominator is not 1 (callers use this as a correctness oracle).
    BigInt to_integer_exact() const {
        if (!is_integer()) {
            throw InexactDivisionError("Rational: " + to_string() + " is not an integer");
        }
        return numerator();
    }

    std::string to_string() const {
        if (is_integer()) return numerator().to_string();
        return numerator().to_string() + "/" + denominator().to_string();
    }

    mpq_srcptr raw() const { return v_; }
    mpq_ptr raw() { return v_; }

private:
    mpq_t v_;
};

}  // namespace bellcong
