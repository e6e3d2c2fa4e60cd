#include "bellcong/sweep_config.hpp"

#include <fstream>
#include <set>

#include "bellcong/errors.hpp"
#include "bellcong/primes.hpp"

namespace bellcong {

std::string_view format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "unknown";
}

std::optional<OutputFormat> format_from_name(std::string_view name) {
    for (OutputFormat f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv}) {
        if (format_name(f) == name) return f;
    }
    return std::nullopt;
}

namespace {

void read_range(const nlohmann::json& j, const char* key, uint64_t& lo, uint64_t& hi) {
    if (!j.contains(key)) return;
    const nlohmann::json& r = j.at(key);
    if (!r.is_array() || r.size() != 2) {
        throw ConfigError(std::string(key) + " must be a [min, max] pair");
    }
    lo = r[0].get<uint64_t>();
    hi = r[1].get<uint64_t>();
    if (lo > hi) throw ConfigError(std::string(key) + " is empty");
}

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& known,
                         const char* where) {
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError(std::string("unknown ") + where + " key: " + key);
        }
    }
}

}  // namespace

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    SweepConfig cfg;
    try {
        reject_unknown_keys(j,
                            {"identities", "prime_range", "a_range", "n_range", "caps",
                             "parallelism", "output", "cache_dir"},
                            "config");
        if (j.contains("identities")) {
            cfg.identities.clear();
            for (const nlohmann::json& name : j.at("identities")) {
                const auto id = identity_from_name(name.get<std::string>());
                if (!id) {
                    throw ConfigError("unknown identity: " + name.get<std::string>());
                }
                cfg.identities.push_back(*id);
            }
            if (cfg.identities.empty()) throw ConfigError("identities list is empty");
        }
        read_range(j, "prime_range", cfg.p_min, cfg.p_max);
        read_range(j, "a_range", cfg.a_min, cfg.a_max);
        read_range(j, "n_range", cfg.n_min, cfg.n_max);
        if (j.contains("caps")) {
            const nlohmann::json& c = j.at("caps");
            reject_unknown_keys(
                c, {"max_prime_power", "max_bell_index", "max_stream_rows", "max_rootratio_n"},
                "caps");
            if (c.contains("max_prime_power")) cfg.caps.max_prime_power = c.at("max_prime_power");
            if (c.contains("max_bell_index")) cfg.caps.max_bell_index = c.at("max_bell_index");
            if (c.contains("max_stream_rows")) cfg.caps.max_stream_rows = c.at("max_stream_rows");
            if (c.contains("max_rootratio_n")) cfg.caps.max_rootratio_n = c.at("max_rootratio_n");
        }
        if (j.contains("parallelism")) {
            cfg.parallelism = j.at("parallelism").get<unsigned>();
            if (cfg.parallelism == 0) throw ConfigError("parallelism must be positive");
        }
        if (j.contains("output")) {
            const nlohmann::json& o = j.at("output");
            reject_unknown_keys(o, {"format", "path"}, "output");
            if (o.contains("format")) {
                const auto f = format_from_name(o.at("format").get<std::string>());
                if (!f) throw ConfigError("unknown output format: " +
                                          o.at("format").get<std::string>());
                cfg.format = *f;
            }
            if (o.contains("path")) cfg.out_path = o.at("path").get<std::string>();
        }
        if (j.contains("cache_dir")) cfg.cache_dir = j.at("cache_dir").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file: " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + file.string() + " is not valid JSON: " + e.what());
    }
    return sweep_config_from_json(j);
}

nlohmann::json sweep_config_to_json(const SweepConfig& cfg) {
    nlohmann::json j;
    nlohmann::json ids = nlohmann::json::array();
    for (Identity id : cfg.identities) ids.push_back(std::string(identity_name(id)));
    j["identities"] = std::move(ids);
    j["prime_range"] = {cfg.p_min, cfg.p_max};
    j["a_range"] = {cfg.a_min, cfg.a_max};
    j["n_range"] = {cfg.n_min, cfg.n_max};
    j["caps"] = {
        {"max_prime_power", cfg.caps.max_prime_power},
        {"max_bell_index", cfg.caps.max_bell_index},
        {"max_stream_rows", cfg.caps.max_stream_rows},
        {"max_rootratio_n", cfg.caps.max_rootratio_n},
    };
    j["parallelism"] = cfg.parallelism;
    j["output"] = {{"format", std::string(format_name(cfg.format))}};
    if (cfg.out_path) j["output"]["path"] = *cfg.out_path;
    if (cfg.cache_dir) j["cache_dir"] = *cfg.cache_dir;
    return j;
}

std::vector<CongruenceCase> expand_grid(const SweepConfig& cfg) {
    if (cfg.p_min > cfg.p_max || cfg.a_min > cfg.a_max || cfg.n_min > cfg.n_max) {
        throw ConfigError("empty parameter range");
    }
    std::vector<uint64_t> primes;
    for (uint64_t p = cfg.p_min; p <= cfg.p_max; ++p) {
        if (is_prime_u64(p)) primes.push_back(p);
    }

    // p^a when it stays within the cap.
    auto pow_within_cap = [&](uint64_t p, uint64_t a) -> std::optional<uint64_t> {
        uint64_t value = 1;
        for (uint64_t i = 0; i < a; ++i) {
            if (value > cfg.caps.max_prime_power / p) return std::nullopt;
            value *= p;
        }
        if (value > cfg.caps.max_prime_power) return std::nullopt;
        return value;
    };

    // Prime powers p^a for a in [lo, hi] within the cap, as (a, p^a) pairs.
    auto prime_powers = [&](uint64_t p, uint64_t lo, uint64_t hi) {
        std::vector<std::pair<uint64_t, uint64_t>> out;
        for (uint64_t a = std::max<uint64_t>(lo, 1); a <= hi; ++a) {
            const auto value = pow_within_cap(p, a);
            if (!value) break;
            out.emplace_back(a, *value);
        }
        return out;
    };

    std::vector<CongruenceCase> grid;
    for (Identity id : cfg.identities) {
        switch (id) {
            case Identity::sun_zagier:
                for (uint64_t p : primes) {
                    for (uint64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
                        grid.push_back({id, p, std::nullopt, n, std::nullopt, std::nullopt});
                    }
                }
                break;
            case Identity::thm1_1:
            case Identity::thm1_2:
            case Identity::gertsch_robert:
                for (uint64_t p : primes) {
                    for (auto [a, pp] : prime_powers(p, cfg.a_min, cfg.a_max)) {
                        (void)pp;
                        for (uint64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
                            grid.push_back({id, p, a, n, std::nullopt, std::nullopt});
                        }
                    }
                }
                break;
            case Identity::touchard:
                for (uint64_t p : primes) {
                    for (uint64_t m = cfg.a_min; m <= cfg.a_max; ++m) {
                        if (m > 0 && !pow_within_cap(p, m)) break;
                        for (uint64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
                            grid.push_back({id, p, m, n, std::nullopt, std::nullopt});
                        }
                    }
                }
                break;
            case Identity::lemma2_1_i:
                for (uint64_t p : primes) {
                    for (auto [a, pp] : prime_powers(p, cfg.a_min, cfg.a_max)) {
                        for (uint64_t j = 0; j <= pp - 1; ++j) {
                            for (uint64_t k = 0; j + k <= pp - 1; ++k) {
                                grid.push_back({id, p, a, std::nullopt, j, k});
                            }
                        }
                    }
                }
                break;
            case Identity::lemma2_1_ii:
                for (uint64_t p : primes) {
                    for (auto [a, pp] : prime_powers(p, cfg.a_min, cfg.a_max)) {
                        (void)pp;
                        grid.push_back(
                            {id, p, a, std::nullopt, std::nullopt, std::nullopt});
                    }
                }
                break;
            case Identity::recurrence2_1:
                grid.push_back({id, std::nullopt, std::nullopt, cfg.n_max, std::nullopt,
                                std::nullopt});
                break;
            case Identity::binom_corollary:
                for (uint64_t p : primes) {
                    for (auto [a, pp] : prime_powers(p, cfg.a_min, cfg.a_max)) {
                        for (uint64_t j = 0; j <= pp - 1; ++j) {
                            grid.push_back({id, p, a, std::nullopt, j, std::nullopt});
                        }
                    }
                }
                break;
        }
    }
    return grid;
}

}  // namespace bellcong
