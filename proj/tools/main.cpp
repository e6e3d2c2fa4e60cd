// bellcong: exact Bell/Stirling/derangement computations and verification
// sweeps for the congruences relating them mod primes and prime powers.
//
// Exit codes: 0 success, 1 verification failures, 2 usage/config errors,
// 3 resource-cap breach, 4 internal error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bellcong/congruence.hpp"
#include "bellcong/errors.hpp"
#include "bellcong/modp_tables.hpp"
#include "bellcong/report.hpp"
#include "bellcong/sequences.hpp"
#include "bellcong/stirling_cache.hpp"
#include "bellcong/sweep_config.hpp"
#include "bellcong/version.hpp"

namespace {

using namespace bellcong;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapBreach = 3;
constexpr int kExitInternal = 4;

std::optional<std::string> env_cache_dir() {
    const char* v = std::getenv("BELLCONG_CACHE_DIR");
    if (v != nullptr && *v != '\0') return std::string(v);
    return std::nullopt;
}

void write_output(const std::string& body, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << body;
        return;
    }
    std::ofstream out(*path);
    if (!out) throw Error("cannot open output file: " + *path);
    out << body;
}

int run_compute(const std::string& seq, const std::vector<uint64_t>& args) {
    const Caps caps;
    const auto usage = [&](const char* msg) {
        std::cerr << "error: " << msg << "\n";
        return kExitUsage;
    };
    if (seq == "bell") {
        if (args.size() != 1) return usage("usage: compute bell <n>");
        std::cout << bell_numbers(args[0], caps).back() << "\n";
    } else if (seq == "bellpoly") {
        if (args.size() != 1) return usage("usage: compute bellpoly <n>");
        std::cout << bell_polynomial(args[0], caps).to_string() << "\n";
    } else if (seq == "stirling") {
        if (args.size() != 2) return usage("usage: compute stirling <n> <k>");
        if (args[1] > args[0]) return usage("stirling: k must satisfy k <= n");
        if (args[0] > caps.max_bell_index) {
            throw ResourceLimitError("stirling: n exceeds cap " +
                                     std::to_string(caps.max_bell_index));
        }
        std::cout << stirling2_explicit(args[0], args[1]) << "\n";
    } else {  // derangement
        if (args.size() != 1) return usage("usage: compute derangement <n>");
        std::cout << derangements(args[0], caps).back() << "\n";
    }
    return kExitOk;
}

struct VerifyFlags {
    std::optional<std::string> config_path;
    std::vector<std::string> identities;
    std::optional<uint64_t> p, a, n, n_max;
    std::optional<unsigned> jobs;
    std::optional<std::string> format, out, cache_dir;
};

int run_verify(const VerifyFlags& f) {
    SweepConfig cfg;
    if (f.config_path) cfg = load_sweep_config(*f.config_path);

    if (!f.identities.empty()) {
        cfg.identities.clear();
        for (const std::string& name : f.identities) {
            const auto id = identity_from_name(name);
            if (!id) throw ConfigError("unknown identity: " + name);
            cfg.identities.push_back(*id);
        }
    }
    if (f.p) {
        (void)PrimeModulus(*f.p);  // reject non-prime pins up front
        cfg.p_min = cfg.p_max = *f.p;
    }
    if (f.a) cfg.a_min = cfg.a_max = *f.a;
    if (f.n) cfg.n_min = cfg.n_max = *f.n;
    if (f.n_max) {
        cfg.n_max = *f.n_max;
        cfg.n_min = std::min(cfg.n_min, cfg.n_max);
    }
    if (f.jobs) {
        if (*f.jobs == 0) throw ConfigError("--jobs must be positive");
        cfg.parallelism = *f.jobs;
    }
    if (f.format) {
        const auto fmt = format_from_name(*f.format);
        if (!fmt) throw ConfigError("unknown format: " + *f.format);
        cfg.format = *fmt;
    }
    if (f.out) cfg.out_path = *f.out;
    if (f.cache_dir) {
        cfg.cache_dir = *f.cache_dir;
    } else if (const auto env = env_cache_dir(); env && !cfg.cache_dir) {
        cfg.cache_dir = *env;
    }

    // Explicitly pinned values that breach a cap are a hard error (exit 3);
    // range-driven expansion below merely skips over-cap prime powers.
    if (f.p && f.a) {
        if (*f.a > 63) throw ResourceLimitError("pinned exponent too large");
        const uint64_t pp = checked_pow_u64(*f.p, static_cast<uint32_t>(*f.a));
        if (pp > cfg.caps.max_prime_power) {
            throw ResourceLimitError("pinned p^a = " + std::to_string(pp) + " exceeds cap " +
                                     std::to_string(cfg.caps.max_prime_power));
        }
    }
    for (const auto& pinned_n : {f.n, f.n_max}) {
        if (pinned_n && *pinned_n > 0 && *pinned_n - 1 > cfg.caps.max_bell_index) {
            throw ResourceLimitError("pinned n exceeds exact-sequence cap " +
                                     std::to_string(cfg.caps.max_bell_index));
        }
    }

    std::vector<CongruenceCase> grid = expand_grid(cfg);
    const std::optional<std::filesystem::path> cache_dir =
        cfg.cache_dir ? std::optional<std::filesystem::path>(*cfg.cache_dir) : std::nullopt;
    const CongruenceLab lab(cfg.caps, cache_dir);
    ReportDocument doc =
        make_report(sweep_config_to_json(cfg), lab.run_sweep(std::move(grid), cfg.parallelism));

    std::string body;
    switch (cfg.format) {
        case OutputFormat::json: body = report_to_json(doc).dump(2) + "\n"; break;
        case OutputFormat::csv: body = report_to_csv(doc); break;
        case OutputFormat::text: body = report_to_text(doc); break;
    }
    write_output(body, cfg.out_path);
    return has_failures(doc) ? kExitVerifyFailed : kExitOk;
}

int run_rootratio(uint64_t n_max) {
    const Caps caps;
    const std::vector<bool> decreasing = root_ratio_monotonicity(n_max, caps);
    size_t violations = 0;
    for (size_t i = 0; i < decreasing.size(); ++i) {
        std::cout << "n=" << i + 1 << ": "
                  << (decreasing[i] ? "strictly decreasing" : "NOT decreasing") << "\n";
        if (!decreasing[i]) ++violations;
    }
    std::cout << "checked " << decreasing.size() << " comparisons";
    if (!decreasing.empty()) {
        if (violations == 0) {
            std::cout << "; root ratios strictly decreasing for every checked n in [1, "
                      << decreasing.size() << "]";
        } else {
            std::cout << "; " << violations << " comparisons NOT strictly decreasing";
        }
    }
    std::cout << " (observation for the checked range only)\n";
    return kExitOk;
}

int run_bench(uint64_t p, uint64_t a, unsigned reps) {
    const Caps caps;
    const PrimeModulus pm(p);
    if (a == 0 || a > 63) throw ConfigError("--a must be in 1..63");
    const uint64_t pp = checked_pow_u64(p, static_cast<uint32_t>(a));
    if (pp > caps.max_prime_power) {
        throw ResourceLimitError("p^a = " + std::to_string(pp) + " exceeds cap " +
                                 std::to_string(caps.max_prime_power));
    }
    if (reps == 0) throw ConfigError("--reps must be positive");

    const uint64_t scalars = (pp + 1) * (pp + 2) / 2;
    std::vector<double> times_ms;
    uint64_t checksum = 0;
    for (unsigned rep = 0; rep < reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        Stirling2Stream stream(pm, pp, caps);
        for (uint64_t n = 0; n <= pp; ++n) {
            const std::vector<uint64_t>& row = stream.next();
            checksum ^= row.back() + row.size();
        }
        const std::chrono::duration<double, std::milli> dt =
            std::chrono::steady_clock::now() - t0;
        times_ms.push_back(dt.count());
        std::printf("rep %u: %.3f ms\n", rep + 1, dt.count());
    }
    std::vector<double> sorted = times_ms;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    std::printf("p=%llu a=%llu rows=%llu scalars=%llu\n",
                static_cast<unsigned long long>(p), static_cast<unsigned long long>(a),
                static_cast<unsigned long long>(pp + 1),
                static_cast<unsigned long long>(scalars));
    std::printf("median %.3f ms, %.3g scalars/s (checksum %llu)\n", median,
                median > 0 ? static_cast<double>(scalars) / (median / 1e3) : 0.0,
                static_cast<unsigned long long>(checksum));
    return kExitOk;
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
    if (flag) return *flag;
    if (const auto env = env_cache_dir()) return *env;
    throw ConfigError("no cache directory (use --cache-dir or BELLCONG_CACHE_DIR)");
}

int run_cache_warm(uint64_t p, uint64_t n_max, const std::optional<std::string>& dir_flag) {
    const Caps caps;
    const PrimeModulus pm(p);
    if (n_max > caps.max_stream_rows) {
        throw ResourceLimitError("n-max exceeds streamed-row cap " +
                                 std::to_string(caps.max_stream_rows));
    }
    const std::filesystem::path dir = resolve_cache_dir(dir_flag);
    warm_stirling_cache(dir, pm, n_max, caps);
    std::cout << "wrote " << stirling_cache_file(dir, p).string() << " (rows 0.." << n_max
              << ")\n";
    return kExitOk;
}

int run_cache_clear(const std::optional<std::string>& dir_flag) {
    const std::filesystem::path dir = resolve_cache_dir(dir_flag);
    std::cout << "removed " << clear_stirling_cache(dir) << " cache file(s) from " << dir.string()
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bell/Stirling/derangement computations and congruence verification"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "Print an exact sequence value");
    std::string seq;
    std::vector<uint64_t> seq_args;
    compute->add_option("sequence", seq, "bell|bellpoly|stirling|derangement")
        ->required()
        ->check(CLI::IsMember({"bell", "bellpoly", "stirling", "derangement"}));
    compute->add_option("args", seq_args, "arguments: n (or n k for stirling)");

    auto* verify = app.add_subcommand("verify", "Run a congruence verification sweep");
    std::string v_config, v_format, v_out, v_cache;
    std::vector<std::string> v_ids;
    uint64_t v_p = 0, v_a = 0, v_n = 0, v_nmax = 0;
    unsigned v_jobs = 0;
    CLI::Option* o_config = verify->add_option("--config", v_config, "JSON config file");
    verify->add_option("--identity", v_ids, "identity to verify (repeatable)");
    CLI::Option* o_p = verify->add_option("--p", v_p, "pin the prime p");
    CLI::Option* o_a = verify->add_option("--a", v_a, "pin the exponent a (m for touchard)");
    CLI::Option* o_n = verify->add_option("--n", v_n, "pin the argument n");
    CLI::Option* o_nmax = verify->add_option("--n-max", v_nmax, "upper bound for n");
    CLI::Option* o_jobs = verify->add_option("--jobs", v_jobs, "parallel workers");
    CLI::Option* o_format = verify->add_option("--format", v_format, "text|json|csv")
                                ->check(CLI::IsMember({"text", "json", "csv"}));
    CLI::Option* o_out = verify->add_option("--out", v_out, "report output path");
    CLI::Option* o_cache = verify->add_option("--cache-dir", v_cache, "Stirling cache directory");

    auto* rootratio = app.add_subcommand(
        "experiment-rootratio", "Exact strict-decrease check of the Bell root ratios");
    uint64_t rr_nmax = 60;
    rootratio->add_option("--n-max", rr_nmax, "compare r_n vs r_{n+1} for n in 1..n_max-1");

    auto* bench = app.add_subcommand("bench", "Time mod-p Stirling table builds");
    uint64_t b_p = 0, b_a = 1;
    unsigned b_reps = 3;
    bench->add_option("--p", b_p, "prime modulus")->required();
    bench->add_option("--a", b_a, "exponent (table spans p^a rows)");
    bench->add_option("--reps", b_reps, "repetitions");

    auto* cache = app.add_subcommand("cache", "Manage the Stirling row cache");
    cache->require_subcommand(1);
    auto* warm = cache->add_subcommand("warm", "Precompute and store rows for a prime");
    uint64_t c_p = 0, c_nmax = 0;
    std::string warm_dir, clear_dir;
    warm->add_option("--p", c_p, "prime modulus")->required();
    warm->add_option("--n-max", c_nmax, "highest row to store")->required();
    CLI::Option* o_warm_dir = warm->add_option("--cache-dir", warm_dir, "cache directory");
    auto* clear = cache->add_subcommand("clear", "Remove cached rows");
    CLI::Option* o_clear_dir = clear->add_option("--cache-dir", clear_dir, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return run_compute(seq, seq_args);
        if (*verify) {
            VerifyFlags f;
            if (*o_config) f.config_path = v_config;
            f.identities = v_ids;
            if (*o_p) f.p = v_p;
            if (*o_a) f.a = v_a;
            if (*o_n) f.n = v_n;
            if (*o_nmax) f.n_max = v_nmax;
            if (*o_jobs) f.jobs = v_jobs;
            if (*o_format) f.format = v_format;
            if (*o_out) f.out = v_out;
            if (*o_cache) f.cache_dir = v_cache;
            return run_verify(f);
        }
        if (*rootratio) return run_rootratio(rr_nmax);
        if (*bench) return run_bench(b_p, b_a, b_reps);
        if (*warm) {
            return run_cache_warm(
                c_p, c_nmax,
                *o_warm_dir ? std::optional<std::string>(warm_dir) : std::nullopt);
        }
        if (*clear) {
            return run_cache_clear(*o_clear_dir ? std::optional<std::string>(clear_dir)
                                                : std::nullopt);
        }
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapBreach;
    } catch (const NotPrimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
