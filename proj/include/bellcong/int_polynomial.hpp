#pragma once

/// Dense polynomial over BigInt, coefficient index = degree.
/// Canonical form: the highest-index coefficient is nonzero (the zero
/// polynomial has an empty coefficient vector).

#include <cstddef>
#include <string>
#include <vector>

#include "bellcong/bigint.hpp"

namespace bellcong {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(BigInt c) {
        IntPolynomial p;
        if (!c.is_zero()) p.c_.push_back(std::move(c));
        return p;
    }
    static IntPolynomial monomial(BigInt c, size_t degree) {
        IntPolynomial p;
        if (!c.is_zero()) {
            p.c_.resize(degree + 1);
            p.c_[degree] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Number of stored coefficients (degree + 1; 0 for the zero polynomial).
    size_t size() const { return c_.size(); }
    ptrdiff_t degree() const { return static_cast<ptrdiff_t>(c_.size()) - 1; }

    const BigInt& coeff(size_t d) const {
        static const BigInt zero;
        return d < c_.size() ? c_[d] : zero;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    /// *this += s * q  (fused, no temporary polynomial).
    void add_scaled(const IntPolynomial& q, const BigInt& s) {
        if (s.is_zero() || q.is_zero()) return;
        if (q.c_.size() > c_.size()) c_.resize(q.c_.size());
        for (size_t i = 0; i < q.c_.size(); ++i) {
            mpz_addmul(c_[i].raw(), q.c_[i].raw(), s.raw());
        }
        trim();
    }

    /// Multiplication by x^k.
    IntPolynomial shifted(size_t k) const {
        if (is_zero() || k == 0) {
            IntPolynomial r = *this;
            return r;
        }
        IntPolynomial r;
        r.c_.resize(c_.size() + k);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc;
        for (size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    /// Sparse rendering, ascending degree: "x + 3*x^2 + x^3"; "0" for zero.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t d = 0; d < c_.size(); ++d) {
            if (c_[d].is_zero()) continue;
            const bool neg = c_[d].sign() < 0;
            const BigInt mag = c_[d].abs();
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const bool unit = mag == BigInt(1);
            if (d == 0) {
                out += mag.to_string();
            } else {
                if (!unit) out += mag.to_string() + "*";
                out += d == 1 ? "x" : "x^" + std::to_string(d);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

}  // namespace bellcong
