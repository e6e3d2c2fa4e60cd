#pragma once

/// Streamed Stirling/Bell tables mod p and p-adic valuation utilities: the
/// substrate every congruence check is assembled from.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "bellcong/bigint.hpp"
#include "bellcong/caps.hpp"
#include "bellcong/mod_polynomial.hpp"
#include "bellcong/mod_scalar.hpp"
#include "bellcong/primes.hpp"

namespace bellcong {

/// Source of Stirling-second-kind rows reduced mod p: the (n+1)-th call to
/// next() yields S(n, 0..n) mod p.  The returned reference stays valid until
/// the following call.
class Stirling2RowSource {
public:
    virtual ~Stirling2RowSource() = default;
    virtual uint64_t modulus() const = 0;
    virtual size_t max_row() const = 0;
    virtual const std::vector<uint64_t>& next() = 0;
};

/// Triangle recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1) mod p, two-row rotation.
class Stirling2Stream final : public Stirling2RowSource {
public:
    Stirling2Stream(const PrimeModulus& p, size_t n_max, const Caps& caps = {});

    uint64_t modulus() const override { return p_; }
    size_t max_row() const override { return n_max_; }
    const std::vector<uint64_t>& next() override;

private:
    uint64_t p_;
    size_t n_max_;
    size_t next_n_ = 0;
    std::vector<uint64_t> prev_, cur_;
};

/// Opens a cached row source when `cache_dir` holds a warmed file covering
/// n_max for this prime; falls back to the compute stream.  Caching is an
/// optimization only; both sources yield identical rows.
std::unique_ptr<Stirling2RowSource> open_stirling2_rows(
    const PrimeModulus& p, size_t n_max,
    const std::optional<std::filesystem::path>& cache_dir = {}, const Caps& caps = {});

/// Materialized triangle mod p (rows 0..n_max), for small sweeps and tests.
std::vector<std::vector<uint64_t>> stirling2_table_modp(size_t n_max, const PrimeModulus& p,
                                                        const Caps& caps = {});

/// The p-adic split of a nonzero integer: n = p^valuation * u with p coprime
/// to u, carrying u mod p as the unit part.
struct ValuedUnit {
    uint64_t valuation;
    ModScalar unit;
};

ValuedUnit valued_unit_of(const BigInt& n, const PrimeModulus& p);

/// Exact BigInt binomial reduced mod p (reference path, no Lucas shortcut).
ModScalar binomial_modp(int64_t n, uint64_t k, const PrimeModulus& p);

/// B_k mod p for k = 0..n_max, as row sums of the streamed Stirling triangle
/// (B_k(1) = sum_j S(k,j)).
std::vector<uint64_t> bell_numbers_modp(size_t n_max, const PrimeModulus& p,
                                        const std::optional<std::filesystem::path>& cache_dir = {},
                                        const Caps& caps = {});

/// B_k(x) mod p for k = 0..n_max.  Built from the Stirling triangle only,
/// never from any congruence under verification.
std::vector<ModPolynomial> bell_polynomials_modp(
    size_t n_max, const PrimeModulus& p,
    const std::optional<std::filesystem::path>& cache_dir = {}, const Caps& caps = {});

}  // namespace bellcong
