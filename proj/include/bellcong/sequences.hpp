#pragma once

/// Exact arbitrary-precision computation of the combinatorial sequences and
/// polynomials: Bell numbers, Stirling numbers of the second kind, Bell
/// (Touchard) polynomials, derangement numbers, plus independent cross-oracles
/// (explicit formulas, EGF expansion) used to validate everything else.

#include <cstdint>
#include <functional>
#include <vector>

#include "bellcong/bigint.hpp"
#include "bellcong/caps.hpp"
#include "bellcong/int_polynomial.hpp"

namespace bellcong {

/// B_0..B_{n_max} via B_{n+1} = sum_k C(n,k) B_k with the binomial row
/// advanced in place.
std::vector<BigInt> bell_numbers(size_t n_max, const Caps& caps = {});

/// Stirling triangle rows S(n, 0..n) for n = 0..n_max, streamed to `sink`
/// with only the previous row retained.
void stirling2_rows(size_t n_max,
                    const std::function<void(size_t, const std::vector<BigInt>&)>& sink,
                    const Caps& caps = {});

/// Full triangle, materialized (rows 0..n_max).
std::vector<std::vector<BigInt>> stirling2_table(size_t n_max, const Caps& caps = {});

/// S(n,k) via the explicit alternating sum k! S(n,k) = sum_j C(k,j)(-1)^{k-j} j^n.
/// The division by k! is a checked exact division.
BigInt stirling2_explicit(uint64_t n, uint64_t k);

/// B_n(x) = sum_k S(n,k) x^k.
IntPolynomial bell_polynomial(size_t n, const Caps& caps = {});
std::vector<IntPolynomial> bell_polynomials(size_t n_max, const Caps& caps = {});

/// Independent path: B_{m+1}(x) = x sum_k C(m,k) B_k(x); must agree with the
/// Stirling-definition path coefficientwise.
std::vector<IntPolynomial> bell_polynomials_via_recurrence(size_t n_max, const Caps& caps = {});

/// D_0..D_{n_max} via D_n = n! sum_{k<=n} (-1)^k / k!; every value is checked
/// to come out an exact integer.
std::vector<BigInt> derangements(size_t n_max, const Caps& caps = {});

/// n! * [x^n] exp(e^x - 1) for n = 0..n_max; independent oracle for
/// bell_numbers (each product checked to be an exact integer).
std::vector<BigInt> egf_bell_oracle(size_t n_max, const Caps& caps = {});

/// For each n in 1..n_max-1, decides exactly whether r_n > r_{n+1} for the
/// root ratios r_n = B_{n+1}^{1/(n+1)} / B_n^{1/n}, via the equivalent integer
/// comparison B_{n+1}^{2n(n+2)} > B_n^{(n+1)(n+2)} * B_{n+2}^{n(n+1)}.
std::vector<bool> root_ratio_monotonicity(size_t n_max, const Caps& caps = {});

}  // namespace bellcong
