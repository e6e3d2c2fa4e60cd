#pragma once

/// Residues mod a certified prime, on native machine words with explicit
/// widening for products.  Moduli stay below 2^63, so addmod cannot overflow.

#include <cstdint>
#include <string>

#include "bellcong/errors.hpp"
#include "bellcong/primes.hpp"

namespace bellcong {

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    const uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline uint64_t negmod(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

class ModScalar {
public:
    explicit ModScalar(const PrimeModulus& p) : p_(p.value()), r_(0) {}

    ModScalar(const PrimeModulus& p, int64_t v) : p_(p.value()) {
        const int64_t m = v % static_cast<int64_t>(p_);
        r_ = static_cast<uint64_t>(m < 0 ? m + static_cast<int64_t>(p_) : m);
    }

    /// Fast path for residues already in [0, p).
    static ModScalar from_residue(const PrimeModulus& p, uint64_t r) {
        ModScalar s(p);
        s.r_ = r % p.value();
        return s;
    }

    uint64_t residue() const { return r_; }
    uint64_t modulus() const { return p_; }

    ModScalar& operator+=(const ModScalar& o) {
        check_same(o);
        r_ = addmod(r_, o.r_, p_);
        return *this;
    }
    ModScalar& operator-=(const ModScalar& o) {
        check_same(o);
        r_ = submod(r_, o.r_, p_);
        return *this;
    }
    ModScalar& operator*=(const ModScalar& o) {
        check_same(o);
        r_ = mulmod(r_, o.r_, p_);
        return *this;
    }
    friend ModScalar operator+(ModScalar a, const ModScalar& b) { return a += b; }
    friend ModScalar operator-(ModScalar a, const ModScalar& b) { return a -= b; }
    friend ModScalar operator*(ModScalar a, const ModScalar& b) { return a *= b; }
    ModScalar operator-() const {
        ModScalar s = *this;
        s.r_ = negmod(r_, p_);
        return s;
    }

    ModScalar pow(uint64_t e) const {
        ModScalar s = *this;
        s.r_ = powmod(r_, e, p_);
        return s;
    }

    /// Multiplicative inverse via Fermat's little theorem (s^{p-2} mod p).
    ModScalar inverse() const {
        if (r_ == 0) throw ZeroInverseError("mod_inverse: zero has no inverse");
        return pow(p_ - 2);
    }

    friend bool operator==(const ModScalar& a, const ModScalar& b) {
        a.check_same(b);
        return a.r_ == b.r_;
    }

private:
    void check_same(const ModScalar& o) const {
        if (p_ != o.p_) {
            throw ModulusMismatchError("ModScalar: mixed moduli " + std::to_string(p_) + " and " +
                                       std::to_string(o.p_));
        }
    }

    uint64_t p_;
    uint64_t r_;
};

inline ModScalar mod_inverse(const ModScalar& s) { return s.inverse(); }

}  // namespace bellcong
