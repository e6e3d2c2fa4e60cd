#pragma once

// Brute-force enumeration oracles for small n, independent of every
// computation path in the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracles {

// Counts the set partitions of {0..n-1} by number of blocks (and in total),
// enumerating restricted growth strings exhaustively.
inline void enumerate_partitions(unsigned n, std::vector<uint64_t>& count_by_blocks,
                                 uint64_t& total) {
    count_by_blocks.assign(n + 1, 0);
    total = 0;
    if (n == 0) {
        count_by_blocks[0] = 1;
        total = 1;
        return;
    }
    std::vector<unsigned> rgs(n, 0);
    for (;;) {
        const unsigned blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        ++count_by_blocks[blocks];
        ++total;
        // next restricted growth string: bump the rightmost position that can
        // still grow, zero the suffix
        size_t i = n - 1;
        for (; i > 0; --i) {
            const unsigned prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
}

inline uint64_t count_derangements(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    uint64_t count = 0;
    do {
        bool has_fixed_point = false;
        for (unsigned i = 0; i < n; ++i) {
            if (perm[i] == i) {
                has_fixed_point = true;
                break;
            }
        }
        if (!has_fixed_point) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace oracles
