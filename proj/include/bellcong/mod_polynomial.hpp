#pragma once

/// Dense polynomial over Z/p, coefficient index = degree, trailing zeros
/// trimmed.  Dense representation on purpose: degrees reach p^a and the
/// coefficients are mostly nonzero after summation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bellcong/int_polynomial.hpp"
#include "bellcong/mod_scalar.hpp"
#include "bellcong/primes.hpp"

namespace bellcong {

class ModPolynomial {
public:
    explicit ModPolynomial(const PrimeModulus& p) : p_(p.value()) {}
    ModPolynomial(const PrimeModulus& p, std::vector<uint64_t> coeffs);

    /// Fast path for coefficient vectors already reduced into [0, p).
    static ModPolynomial from_reduced(const PrimeModulus& p, std::vector<uint64_t> coeffs);

    static ModPolynomial monomial(const PrimeModulus& p, uint64_t c, size_t degree);

    uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    size_t size() const { return c_.size(); }
    ptrdiff_t degree() const { return static_cast<ptrdiff_t>(c_.size()) - 1; }
    uint64_t coeff(size_t d) const { return d < c_.size() ? c_[d] : 0; }

    ModPolynomial& operator+=(const ModPolynomial& o);
    ModPolynomial& operator-=(const ModPolynomial& o);
    friend ModPolynomial operator+(ModPolynomial a, const ModPolynomial& b) { return a += b; }
    friend ModPolynomial operator-(ModPolynomial a, const ModPolynomial& b) { return a -= b; }

    ModPolynomial scaled(uint64_t s) const;
    /// Multiplication by x^k.
    ModPolynomial shifted(size_t k) const;
    /// *this += s * q  (fused).
    void add_scaled(const ModPolynomial& q, uint64_t s);

    uint64_t eval(uint64_t x) const;

    friend bool operator==(const ModPolynomial& a, const ModPolynomial& b);

    /// Sparse rendering, ascending degree, least nonnegative residues.
    std::string to_string() const;

private:
    void check_same(const ModPolynomial& o) const;
    void trim();

    uint64_t p_ = 2;
    std::vector<uint64_t> c_;
};

/// Coefficientwise reduction of an exact integer polynomial.
ModPolynomial reduce_mod(const IntPolynomial& poly, const PrimeModulus& p);

}  // namespace bellcong
