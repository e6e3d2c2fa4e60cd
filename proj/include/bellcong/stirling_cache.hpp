#pragma once

/// Binary cache of Stirling rows mod p.
///
/// File layout: magic "STIR", version u8 (= 1), p as u64 LE, n_max as u64 LE,
/// then rows 0..n_max row-major; each residue is stored little-endian in the
/// minimal unsigned width of ceil(log2 p) bits rounded up to a whole byte.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <vector>

#include "bellcong/caps.hpp"
#include "bellcong/modp_tables.hpp"
#include "bellcong/primes.hpp"

namespace bellcong {

inline constexpr char kStirlingCacheMagic[4] = {'S', 'T', 'I', 'R'};
inline constexpr uint8_t kStirlingCacheVersion = 1;

unsigned residue_width_bytes(uint64_t p);

std::filesystem::path stirling_cache_file(const std::filesystem::path& dir, uint64_t p);

/// Computes and writes rows 0..n_max for p into `dir` (created if missing).
void warm_stirling_cache(const std::filesystem::path& dir, const PrimeModulus& p, size_t n_max,
                         const Caps& caps = {});

/// Removes all cache files in `dir`; returns how many were removed.
size_t clear_stirling_cache(const std::filesystem::path& dir);

struct StirlingCacheInfo {
    uint64_t p;
    uint64_t n_max;
};

/// Header of a cache file, or nullopt when the file is absent or malformed.
std::optional<StirlingCacheInfo> probe_stirling_cache(const std::filesystem::path& file);

class StirlingCacheReader final : public Stirling2RowSource {
public:
    /// Streams rows 0..n_max_wanted from `file`; the file must cover them.
    StirlingCacheReader(const std::filesystem::path& file, size_t n_max_wanted);
    ~StirlingCacheReader() override;

    StirlingCacheReader(const StirlingCacheReader&) = delete;
    StirlingCacheReader& operator=(const StirlingCacheReader&) = delete;

    uint64_t modulus() const override { return p_; }
    size_t max_row() const override { return n_max_; }
    const std::vector<uint64_t>& next() override;

private:
    std::FILE* f_ = nullptr;
    uint64_t p_ = 0;
    unsigned width_ = 0;
    size_t n_max_ = 0;
    size_t next_n_ = 0;
    std::vector<uint64_t> row_;
    std::vector<unsigned char> buf_;
};

}  // namespace bellcong
