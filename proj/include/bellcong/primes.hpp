#pragma once

#include <cstdint>

#include "bellcong/errors.hpp"

namespace bellcong {

/// Deterministic Miller-Rabin over the fixed witness set that certifies the
/// whole 64-bit range.
bool is_prime_u64(uint64_t n);

/// A certified prime modulus.  Construction verifies primality and rejects
/// values at or above 2^63 (verification sweeps never need huge primes, and
/// residues below 2^63 keep word arithmetic overflow-free).
class PrimeModulus {
public:
    explicit PrimeModulus(uint64_t p);
    uint64_t value() const { return p_; }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    uint64_t p_;
};

/// base^e with overflow detection.
uint64_t checked_pow_u64(uint64_t base, uint32_t e);

/// p^a with a >= 1, the modulus-range parameter of the prime-power congruences.
struct PrimePower {
    PrimePower(const PrimeModulus& prime, uint32_t exponent);

    PrimeModulus p;
    uint32_t a;
    uint64_t value;
};

}  // namespace bellcong
