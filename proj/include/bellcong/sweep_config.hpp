#pragma once

/// Sweep configuration: which identities to verify over which ranges of
/// primes, exponents and arguments, plus caps, parallelism and output.
/// Loadable from JSON; command-line flags override file fields.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bellcong/caps.hpp"
#include "bellcong/congruence.hpp"

namespace bellcong {

enum class OutputFormat { text, json, csv };

std::string_view format_name(OutputFormat f);
std::optional<OutputFormat> format_from_name(std::string_view name);

struct SweepConfig {
    std::vector<Identity> identities{kAllIdentities.begin(), kAllIdentities.end()};
    uint64_t p_min = 2, p_max = 13;
    uint64_t a_min = 1, a_max = 2;  // doubles as the Touchard exponent m (m = 0 allowed)
    uint64_t n_min = 1, n_max = 30;
    Caps caps;
    unsigned parallelism = 1;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> out_path;
    std::optional<std::string> cache_dir;
};

/// Parses a config document; unknown keys, identity names or formats are
/// rejected with ConfigError.
SweepConfig sweep_config_from_json(const nlohmann::json& j);
SweepConfig load_sweep_config(const std::filesystem::path& file);

nlohmann::json sweep_config_to_json(const SweepConfig& cfg);

/// Deterministic case enumeration.  Prime powers beyond caps.max_prime_power
/// are skipped; identity-specific auxiliary indices (j, k) are enumerated
/// exhaustively within each p^a.
std::vector<CongruenceCase> expand_grid(const SweepConfig& cfg);

}  // namespace bellcong
