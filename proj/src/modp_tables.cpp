#include "bellcong/modp_tables.hpp"

#include <string>

#include "bellcong/errors.hpp"
#include "bellcong/stirling_cache.hpp"

namespace bellcong {

Stirling2Stream::Stirling2Stream(const PrimeModulus& p, size_t n_max, const Caps& caps)
    : p_(p.value()), n_max_(n_max) {
    if (n_max > caps.max_stream_rows) {
        throw ResourceLimitError("stirling2_table_modp: " + std::to_string(n_max) +
                                 " rows exceed cap " + std::to_string(caps.max_stream_rows));
    }
}

const std::vector<uint64_t>& Stirling2Stream::next() {
    const size_t n = next_n_++;
    if (n > n_max_) throw Error("Stirling2Stream: read past last row");
    if (n == 0) {
        cur_.assign(1, 1 % p_);
        return cur_;
    }
    prev_.swap(cur_);
    cur_.assign(n + 1, 0);
    for (size_t k = 1; k <= n; ++k) {
        // S(n,k) = k S(n-1,k) + S(n-1,k-1)
        uint64_t t = k < prev_.size() ? mulmod(k % p_, prev_[k], p_) : 0;
        cur_[k] = addmod(t, prev_[k - 1], p_);
    }
    return cur_;
}

std::unique_ptr<Stirling2RowSource> open_stirling2_rows(
    const PrimeModulus& p, size_t n_max, const std::optional<std::filesystem::path>& cache_dir,
    const Caps& caps) {
    if (cache_dir) {
        const auto file = stirling_cache_file(*cache_dir, p.value());
        const auto info = probe_stirling_cache(file);
        if (info && info->p == p.value() && info->n_max >= n_max) {
            return std::make_unique<StirlingCacheReader>(file, n_max);
        }
    }
    return std::make_unique<Stirling2Stream>(p, n_max, caps);
}

std::vector<std::vector<uint64_t>> stirling2_table_modp(size_t n_max, const PrimeModulus& p,
                                                        const Caps& caps) {
    Stirling2Stream stream(p, n_max, caps);
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(n_max + 1);
    for (size_t n = 0; n <= n_max; ++n) rows.push_back(stream.next());
    return rows;
}

ValuedUnit valued_unit_of(const BigInt& n, const PrimeModulus& p) {
    if (n.is_zero()) throw ZeroInputError("valued_unit_of: zero input");
    BigInt unit;
    BigInt prime(p.value());
    const uint64_t valuation = mpz_remove(unit.raw(), n.raw(), prime.raw());
    return ValuedUnit{valuation, ModScalar::from_residue(p, unit.mod_u64(p.value()))};
}

ModScalar binomial_modp(int64_t n, uint64_t k, const PrimeModulus& p) {
    return ModScalar::from_residue(p, binomial(n, k).mod_u64(p.value()));
}

std::vector<uint64_t> bell_numbers_modp(size_t n_max, const PrimeModulus& p,
                                        const std::optional<std::filesystem::path>& cache_dir,
                                        const Caps& caps) {
    auto rows = open_stirling2_rows(p, n_max, cache_dir, caps);
    std::vector<uint64_t> bell(n_max + 1);
    for (size_t n = 0; n <= n_max; ++n) {
        const std::vector<uint64_t>& row = rows->next();
        uint64_t acc = 0;
        for (uint64_t v : row) acc = addmod(acc, v, p.value());
        bell[n] = acc;
    }
    return bell;
}

std::vector<ModPolynomial> bell_polynomials_modp(
    size_t n_max, const PrimeModulus& p, const std::optional<std::filesystem::path>& cache_dir,
    const Caps& caps) {
    auto rows = open_stirling2_rows(p, n_max, cache_dir, caps);
    std::vector<ModPolynomial> polys;
    polys.reserve(n_max + 1);
    for (size_t n = 0; n <= n_max; ++n) {
        polys.push_back(ModPolynomial::from_reduced(p, rows->next()));
    }
    return polys;
}

}  // namespace bellcong
