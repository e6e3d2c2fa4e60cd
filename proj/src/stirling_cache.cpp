#include "bellcong/stirling_cache.hpp"

#include <bit>
#include <cstring>
#include <string>

#include "bellcong/errors.hpp"

namespace bellcong {

namespace {

void put_u64_le(unsigned char* out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

uint64_t get_u64_le(const unsigned char* in) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(in[i]) << (8 * i);
    return v;
}

constexpr size_t kHeaderBytes = 4 + 1 + 8 + 8;

}  // namespace

unsigned residue_width_bytes(uint64_t p) {
    // Residues lie in [0, p), so ceil(log2 p) bits suffice.
    const unsigned bits = std::bit_width(p - 1);
    return (bits + 7) / 8;
}

std::filesystem::path stirling_cache_file(const std::filesystem::path& dir, uint64_t p) {
    return dir / ("stir_p" + std::to_string(p) + ".bin");
}

void warm_stirling_cache(const std::filesystem::path& dir, const PrimeModulus& p, size_t n_max,
                         const Caps& caps) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = stirling_cache_file(dir, p.value());
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw Error("cannot open cache file for writing: " + path.string());

    unsigned char header[kHeaderBytes];
    std::memcpy(header, kStirlingCacheMagic, 4);
    header[4] = kStirlingCacheVersion;
    put_u64_le(header + 5, p.value());
    put_u64_le(header + 13, static_cast<uint64_t>(n_max));
    if (std::fwrite(header, 1, kHeaderBytes, f) != kHeaderBytes) {
        std::fclose(f);
        throw Error("short write to cache file: " + path.string());
    }

    const unsigned width = residue_width_bytes(p.value());
    std::vector<unsigned char> buf;
    Stirling2Stream stream(p, n_max, caps);
    for (size_t n = 0; n <= n_max; ++n) {
        const std::vector<uint64_t>& row = stream.next();
        buf.resize(row.size() * width);
        for (size_t i = 0; i < row.size(); ++i) {
            for (unsigned b = 0; b < width; ++b) {
                buf[i * width + b] = static_cast<unsigned char>(row[i] >> (8 * b));
            }
        }
        if (std::fwrite(buf.data(), 1, buf.size(), f) != buf.size()) {
            std::fclose(f);
            throw Error("short write to cache file: " + path.string());
        }
    }
    std::fclose(f);
}

size_t clear_stirling_cache(const std::filesystem::path& dir) {
    size_t removed = 0;
    if (!std::filesystem::exists(dir)) return removed;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("stir_p") && name.ends_with(".bin")) {
            std::filesystem::remove(entry.path());
            ++removed;
        }
    }
    return removed;
}

std::optional<StirlingCacheInfo> probe_stirling_cache(const std::filesystem::path& file) {
    std::FILE* f = std::fopen(file.c_str(), "rb");
    if (!f) return std::nullopt;
    unsigned char header[kHeaderBytes];
    const size_t got = std::fread(header, 1, kHeaderBytes, f);
    std::fclose(f);
    if (got != kHeaderBytes) return std::nullopt;
    if (std::memcmp(header, kStirlingCacheMagic, 4) != 0) return std::nullopt;
    if (header[4] != kStirlingCacheVersion) return std::nullopt;
    StirlingCacheInfo info;
    info.p = get_u64_le(header + 5);
    info.n_max = get_u64_le(header + 13);
    return info;
}

StirlingCacheReader::StirlingCacheReader(const std::filesystem::path& file, size_t n_max_wanted) {
    const auto info = probe_stirling_cache(file);
    if (!info) throw CacheFormatError("bad cache file: " + file.string());
    if (info->n_max < n_max_wanted) {
        throw CacheFormatError("cache file " + file.string() + " covers only " +
                               std::to_string(info->n_max) + " rows, need " +
                               std::to_string(n_max_wanted));
    }
    p_ = info->p;
    width_ = residue_width_bytes(p_);
    n_max_ = n_max_wanted;
    f_ = std::fopen(file.c_str(), "rb");
    if (!f_) throw Error("cannot open cache file: " + file.string());
    if (std::fseek(f_, static_cast<long>(kHeaderBytes), SEEK_SET) != 0) {
        std::fclose(f_);
        f_ = nullptr;
        throw CacheFormatError("cannot seek in cache file: " + file.string());
    }
}

StirlingCacheReader::~StirlingCacheReader() {
    if (f_) std::fclose(f_);
}

const std::vector<uint64_t>& StirlingCacheReader::next() {
    const size_t n = next_n_++;
    if (n > n_max_) throw Error("StirlingCacheReader: read past last row");
    row_.assign(n + 1, 0);
    buf_.resize((n + 1) * width_);
    if (std::fread(buf_.data(), 1, buf_.size(), f_) != buf_.size()) {
        throw CacheFormatError("truncated cache file");
    }
    for (size_t i = 0; i <= n; ++i) {
        uint64_t v = 0;
        for (unsigned b = 0; b < width_; ++b) {
            v |= static_cast<uint64_t>(buf_[i * width_ + b]) << (8 * b);
        }
        if (v >= p_) throw CacheFormatError("cache residue out of range");
        row_[i] = v;
    }
    return row_;
}

}  // namespace bellcong
