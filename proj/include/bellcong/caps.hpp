#pragma once

#include <cstdint>

namespace bellcong {

// Resource caps for table builds and sweeps.  Defaults are sized so that every
// default-config operation finishes in well under a minute on a desktop; callers
// may raise them explicitly.
struct Caps {
    uint64_t max_bell_index = 5000;    // exact Bell / derangement / Stirling indices
    uint64_t max_prime_power = 4096;   // bound on every generated p^a
    uint64_t max_stream_rows = 20000;  // streamed mod-p Stirling rows
    uint64_t max_rootratio_n = 200;    // root-ratio experiment range
};

}  // namespace bellcong
