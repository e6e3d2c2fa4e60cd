#pragma once

/// Arbitrary-precision signed integer with value semantics.
///
/// Thin RAII wrapper over GMP's mpz_t.  GMP keeps values in canonical form
/// (no redundant leading limbs, zero is unsigned), and all arithmetic is exact;
/// the wrapper adds the checked operations the rest of the library relies on,
/// notably divide_exact() which treats an inexact division as a defect.

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "bellcong/errors.hpp"

namespace bellcong {

class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(int n) { mpz_init_set_si(v_, n); }
    BigInt(long n) { mpz_init_set_si(v_, n); }
    BigInt(long long n) {
        static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
        mpz_init_set_si(v_, static_cast<long>(n));
    }
    BigInt(unsigned int n) { mpz_init_set_ui(v_, n); }
    BigInt(unsigned long n) { mpz_init_set_ui(v_, n); }
    BigInt(unsigned long long n) { mpz_init_set_ui(v_, static_cast<unsigned long>(n)); }

    explicit BigInt(const std::string& decimal) {
        if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw Error("BigInt: invalid decimal string: " + decimal);
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.v_, v_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = mpz_cmp(a.v_, b.v_);
        return c <=> 0;
    }

    int sign() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.v_, v_);
        return r;
    }

    /// Quotient of an exact division; throws InexactDivisionError on a remainder.
    BigInt divide_exact(const BigInt& d) const {
        if (d.is_zero()) throw ZeroInputError("divide_exact: zero divisor");
        BigInt q, r;
        mpz_tdiv_qr(q.v_, r.v_, v_, d.v_);
        if (!r.is_zero()) {
            throw InexactDivisionError("divide_exact: " + to_string() + " not divisible by " +
                                       d.to_string());
        }
        return q;
    }

    /// Least nonnegative residue modulo m (m > 0), also for negative values.
    uint64_t mod_u64(uint64_t m) const {
        if (m == 0) throw ZeroInputError("mod_u64: zero modulus");
        return mpz_fdiv_ui(v_, static_cast<unsigned long>(m));
    }

    static BigInt pow(const BigInt& base, uint64_t e) {
        BigInt r;
        mpz_pow_ui(r.v_, base.v_, static_cast<unsigned long>(e));
        return r;
    }

    static BigInt factorial(uint64_t n) {
        BigInt r;
        mpz_fac_ui(r.v_, static_cast<unsigned long>(n));
        return r;
    }

    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }

    bool fits_u64() const { return mpz_sgn(v_) >= 0 && mpz_fits_ulong_p(v_); }
    uint64_t to_u64() const {
        if (!fits_u64()) throw Error("BigInt: value does not fit in uint64_t");
        return mpz_get_ui(v_);
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    mpz_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const BigInt& z) { return os << z.to_string(); }

/// binomial(n, k) for any integer n and k >= 0; negative upper arguments use
/// binomial(n, k) = (-1)^k binomial(k - n - 1, k).
inline BigInt binomial(const BigInt& n, uint64_t k) {
    BigInt r;
    mpz_bin_ui(r.raw(), n.raw(), static_cast<unsigned long>(k));
    return r;
}

inline BigInt binomial(int64_t n, uint64_t k) { return binomial(BigInt(n), k); }

}  // namespace bellcong
