#pragma once

/// One verifier per congruence identity.  Each assembles both sides from
/// independent primitives (exact integers, streamed Stirling tables mod p)
/// and reports exact pass/fail with witnesses; none consumes a congruence it
/// is itself checking.

#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellcong/caps.hpp"
#include "bellcong/mod_polynomial.hpp"
#include "bellcong/primes.hpp"

namespace bellcong {

enum class Identity {
    sun_zagier,      // sum_{k=1}^{p-1} B_k/(-n)^k == (-1)^{n-1} D_{n-1}  (mod p), p !| n
    thm1_1,          // sum_{k=1}^{p^a-1} B_k/(-n)^k == a(-1)^{n-1} D_{n-1}  (mod p), p !| n
    thm1_2,          // (-x)^n sum B_k(x)/(-n)^k == -sum_r x^{p^r} sum_k ((n-1)!/k!)(-x)^k in F_p[x]
    touchard,        // B_{p^m+n} == m B_n + B_{n+1}  (mod p)
    gertsch_robert,  // B_{p^a+n}(x) == B_{n+1}(x) + B_n(x) sum_{r=1}^a x^{p^r}  (mod p)
    lemma2_1_i,      // binom(p^a-1-k, j) / binom(-1-k, j) == 1 as p-adic numbers, j+k <= p^a-1
    lemma2_1_ii,     // B_{p^a}(x) == sum_{r=0}^a x^{p^r}  (mod p)
    recurrence2_1,   // B_{m+1}(x) = x sum_k binom(m,k) B_k(x), exact over Z
    binom_corollary, // binom(p^a-1, j) == (-1)^j  (mod p)
};

inline constexpr std::array<Identity, 9> kAllIdentities = {
    Identity::sun_zagier,   Identity::thm1_1,       Identity::thm1_2,
    Identity::touchard,     Identity::gertsch_robert, Identity::lemma2_1_i,
    Identity::lemma2_1_ii,  Identity::recurrence2_1, Identity::binom_corollary,
};

std::string_view identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);

/// Parameter tuple of one congruence check.  Field `a` carries the exponent m
/// for the Touchard identity; inapplicable fields stay empty.  Member order is
/// the canonical sort key.
struct CongruenceCase {
    Identity id{};
    std::optional<uint64_t> p;
    std::optional<uint64_t> a;
    std::optional<uint64_t> n;
    std::optional<uint64_t> j;
    std::optional<uint64_t> k;

    friend auto operator<=>(const CongruenceCase&, const CongruenceCase&) = default;
};

enum class Status { pass, fail, skipped_hypothesis, error };

std::string_view status_name(Status s);
std::optional<Status> status_from_name(std::string_view name);

struct VerificationReport {
    CongruenceCase c;
    Status status = Status::pass;
    std::string lhs;   // witness, rendered on fail
    std::string rhs;   // witness, rendered on fail
    std::string note;  // violated hypothesis when skipped; message when errored
    std::chrono::nanoseconds elapsed{0};
};

/// Both sides of the thm1_2 polynomial congruence assembled in F_p[x] from
/// the given Bell polynomials mod p (index up to p^a - 1).  Requires p coprime
/// to n; runtime-checks invertibility rather than assuming it.
std::pair<ModPolynomial, ModPolynomial> thm1_2_sides(const PrimeModulus& p, uint32_t a,
                                                     uint64_t n,
                                                     const std::vector<ModPolynomial>& bell_polys);

class CongruenceLab {
public:
    explicit CongruenceLab(Caps caps = {},
                           std::optional<std::filesystem::path> cache_dir = std::nullopt)
        : caps_(caps), cache_dir_(std::move(cache_dir)) {}

    const Caps& caps() const { return caps_; }

    VerificationReport verify_sun_zagier(uint64_t p, uint64_t n) const;
    VerificationReport verify_thm1_1(uint64_t p, uint32_t a, uint64_t n) const;
    VerificationReport verify_thm1_2(uint64_t p, uint32_t a, uint64_t n) const;
    VerificationReport verify_touchard(uint64_t p, uint32_t m, uint64_t n) const;
    VerificationReport verify_gertsch_robert(uint64_t p, uint32_t a, uint64_t n) const;
    VerificationReport verify_lemma2_1_i(uint64_t p, uint32_t a, uint64_t j, uint64_t k) const;
    VerificationReport verify_lemma2_1_ii(uint64_t p, uint32_t a) const;
    VerificationReport verify_binom_corollary(uint64_t p, uint32_t a, uint64_t j) const;
    VerificationReport verify_recurrence2_1(size_t n_max) const;

    /// Dispatch on the case's identity; throws on malformed parameters,
    /// non-prime p, or cap breach.
    VerificationReport verify(const CongruenceCase& c) const;

    /// Runs every case, sharing per-prime tables and executing prime groups
    /// in parallel.  Output is sorted by (identity, p, a, n, j, k) and
    /// byte-identical across parallelism settings (timings aside); per-case
    /// errors become `error` records, the sweep itself never aborts.
    std::vector<VerificationReport> run_sweep(std::vector<CongruenceCase> grid,
                                              unsigned parallelism) const;

private:
    std::vector<VerificationReport> run_group(const std::vector<CongruenceCase>& cases) const;

    Caps caps_;
    std::optional<std::filesystem::path> cache_dir_;
};

}  // namespace bellcong
