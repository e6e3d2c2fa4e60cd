#include "bellcong/primes.hpp"

#include <string>

namespace bellcong {

namespace {

uint64_t mulmod_full(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_full(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_full(r, b, m);
        b = mulmod_full(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for every n < 3.3e24 (Sorenson-Webster).
    for (uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_full(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_full(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(uint64_t p) : p_(p) {
    if (p >= (uint64_t{1} << 63)) {
        throw NotPrimeError("prime modulus must be below 2^63: " + std::to_string(p));
    }
    if (!is_prime_u64(p)) {
        throw NotPrimeError("not prime: " + std::to_string(p));
    }
}

uint64_t checked_pow_u64(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base) {
            throw ResourceLimitError("prime power overflows 64 bits");
        }
        r *= base;
    }
    return r;
}

PrimePower::PrimePower(const PrimeModulus& prime, uint32_t exponent)
    : p(prime), a(exponent), value(0) {
    if (exponent == 0) {
        throw HypothesisError("prime-power exponent must be positive");
    }
    value = checked_pow_u64(prime.value(), exponent);
}

}  // namespace bellcong
