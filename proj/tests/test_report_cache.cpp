#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "bellcong/report.hpp"
#include "bellcong/stirling_cache.hpp"
#include "bellcong/sweep_config.hpp"

using namespace bellcong;

namespace {

VerificationReport sample_report(Status status) {
    VerificationReport r;
    r.c = {Identity::thm1_1, 3, 2, 1, std::nullopt, std::nullopt};
    r.status = status;
    if (status == Status::fail) {
        r.lhs = "2";
        r.rhs = "1";
    }
    if (status == Status::skipped_hypothesis) r.note = "p divides n";
    r.elapsed = std::chrono::nanoseconds(123456);
    return r;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("bellcong_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("report JSON round trip and summary bookkeeping") {
    std::vector<VerificationReport> records = {sample_report(Status::pass),
                                               sample_report(Status::fail),
                                               sample_report(Status::skipped_hypothesis)};
    records[1].c.n = 2;
    records[2].c.n = 3;
    const ReportDocument doc = make_report(sweep_config_to_json(SweepConfig{}), records);
    CHECK(doc.summary.records == 3);
    CHECK(doc.summary.pass == 1);
    CHECK(doc.summary.fail == 1);
    CHECK(doc.summary.skipped_hypothesis == 1);
    CHECK(doc.summary.error == 0);
    CHECK(doc.summary.records == doc.records.size());
    CHECK(has_failures(doc));

    const ReportDocument parsed = report_from_json(report_to_json(doc));
    CHECK(parsed == doc);

    // parse() o serialize() is the identity on serialized documents too
    CHECK(report_to_json(parsed) == report_to_json(doc));
}

TEST_CASE("CSV rendering: fixed columns, empty inapplicable fields") {
    ReportDocument doc = make_report({}, {sample_report(Status::pass)});
    const std::string csv = report_to_csv(doc);
    CHECK(csv.starts_with("identity,p,a,n,j,k,status,lhs,rhs,elapsed_ms\n"));
    CHECK(csv.find("thm1_1,3,2,1,,,pass,,,0.123\n") != std::string::npos);

    ReportDocument fail_doc = make_report({}, {sample_report(Status::fail)});
    CHECK(report_to_csv(fail_doc).find("thm1_1,3,2,1,,,fail,2,1,0.123\n") != std::string::npos);

    // fields containing separators are quoted
    VerificationReport weird = sample_report(Status::fail);
    weird.lhs = "a,b\"c";
    const std::string escaped = report_to_csv(make_report({}, {weird}));
    CHECK(escaped.find("\"a,b\"\"c\"") != std::string::npos);

    // the timing-free fingerprint drops only the elapsed column
    CHECK(records_fingerprint(doc) == "thm1_1,3,2,1,,,pass,,,\n");
}

TEST_CASE("text rendering carries witnesses on failure and notes on skips") {
    const std::string text = report_to_text(
        make_report({}, {sample_report(Status::fail), sample_report(Status::skipped_hypothesis)}));
    CHECK(text.find("lhs=2 rhs=1") != std::string::npos);
    CHECK(text.find("note=\"p divides n\"") != std::string::npos);
    CHECK(text.find("summary: records=2") != std::string::npos);
}

TEST_CASE("sweep config parsing") {
    const auto j = nlohmann::json::parse(R"({
        "identities": ["thm1_1", "sun_zagier"],
        "prime_range": [3, 7],
        "a_range": [1, 3],
        "n_range": [1, 10],
        "caps": {"max_prime_power": 343},
        "parallelism": 2,
        "output": {"format": "csv", "path": "out.csv"}
    })");
    const SweepConfig cfg = sweep_config_from_json(j);
    CHECK(cfg.identities == std::vector<Identity>{Identity::thm1_1, Identity::sun_zagier});
    CHECK(cfg.p_min == 3);
    CHECK(cfg.p_max == 7);
    CHECK(cfg.a_max == 3);
    CHECK(cfg.caps.max_prime_power == 343);
    CHECK(cfg.caps.max_bell_index == 5000);  // untouched default
    CHECK(cfg.parallelism == 2);
    CHECK(cfg.format == OutputFormat::csv);
    CHECK(cfg.out_path == "out.csv");

    CHECK_THROWS_AS(sweep_config_from_json(nlohmann::json::parse(R"({"identities": ["thm9"]})")),
                    ConfigError);
    CHECK_THROWS_AS(sweep_config_from_json(nlohmann::json::parse(R"({"bogus": 1})")),
                    ConfigError);
    CHECK_THROWS_AS(sweep_config_from_json(nlohmann::json::parse(R"({"prime_range": [5, 3]})")),
                    ConfigError);
    CHECK_THROWS_AS(
        sweep_config_from_json(nlohmann::json::parse(R"({"output": {"format": "xml"}})")),
        ConfigError);

    // the echoed config parses back to the same document
    CHECK(sweep_config_to_json(sweep_config_from_json(sweep_config_to_json(cfg))) ==
          sweep_config_to_json(cfg));
}

TEST_CASE("grid expansion bounds prime powers by the cap") {
    SweepConfig cfg;
    cfg.identities = {Identity::thm1_2};
    cfg.p_min = 2;
    cfg.p_max = 7;
    cfg.a_min = 1;
    cfg.a_max = 9;
    cfg.n_min = 1;
    cfg.n_max = 1;
    cfg.caps.max_prime_power = 343;
    const auto grid = expand_grid(cfg);
    // 2^1..2^8, 3^1..3^5, 5^1..5^3, 7^1..7^3
    CHECK(grid.size() == 8 + 5 + 3 + 3);
    for (const auto& c : grid) {
        uint64_t pp = 1;
        for (uint64_t i = 0; i < *c.a; ++i) pp *= *c.p;
        CHECK(pp <= 343);
    }
}

TEST_CASE("Stirling cache: residue widths, round trip, and equivalence") {
    CHECK(residue_width_bytes(2) == 1);
    CHECK(residue_width_bytes(3) == 1);
    CHECK(residue_width_bytes(251) == 1);
    CHECK(residue_width_bytes(257) == 2);
    CHECK(residue_width_bytes(65537) == 3);
    CHECK(residue_width_bytes((uint64_t{1} << 61) - 1) == 8);

    const TempDir dir;
    const PrimeModulus p97(97);
    warm_stirling_cache(dir.path, p97, 120);

    const auto info = probe_stirling_cache(stirling_cache_file(dir.path, 97));
    REQUIRE(info.has_value());
    CHECK(info->p == 97);
    CHECK(info->n_max == 120);

    // cached rows equal computed rows
    StirlingCacheReader reader(stirling_cache_file(dir.path, 97), 120);
    Stirling2Stream fresh(p97, 120);
    for (size_t n = 0; n <= 120; ++n) {
        CHECK(reader.next() == fresh.next());
    }

    // a file that covers fewer rows than requested is rejected
    CHECK_THROWS_AS(StirlingCacheReader(stirling_cache_file(dir.path, 97), 121),
                    CacheFormatError);

    // the factory uses the cache when possible and recomputes otherwise,
    // with identical results either way
    const auto with_cache = bell_numbers_modp(120, p97, dir.path);
    const auto without_cache = bell_numbers_modp(120, p97);
    CHECK(with_cache == without_cache);
    const auto beyond = bell_numbers_modp(200, p97, dir.path);  // falls back to compute
    const auto beyond_plain = bell_numbers_modp(200, p97);
    CHECK(beyond == beyond_plain);

    const auto polys_cached = bell_polynomials_modp(120, p97, dir.path);
    const auto polys_plain = bell_polynomials_modp(120, p97);
    CHECK(polys_cached.size() == polys_plain.size());
    for (size_t i = 0; i < polys_cached.size(); ++i) {
        CHECK(polys_cached[i] == polys_plain[i]);
    }

    CHECK(clear_stirling_cache(dir.path) == 1);
    CHECK(!probe_stirling_cache(stirling_cache_file(dir.path, 97)).has_value());
}

TEST_CASE("sweeps yield identical records with caching on and off") {
    const TempDir dir;
    warm_stirling_cache(dir.path, PrimeModulus(3), 700);
    warm_stirling_cache(dir.path, PrimeModulus(5), 700);

    SweepConfig cfg;
    cfg.identities = {Identity::thm1_1, Identity::thm1_2, Identity::gertsch_robert};
    cfg.p_min = 3;
    cfg.p_max = 5;
    cfg.a_min = 1;
    cfg.a_max = 3;
    cfg.n_min = 1;
    cfg.n_max = 12;
    const auto grid = expand_grid(cfg);

    const CongruenceLab cached(cfg.caps, dir.path);
    const CongruenceLab plain(cfg.caps);
    const auto with_cache = make_report({}, cached.run_sweep(grid, 2));
    const auto without_cache = make_report({}, plain.run_sweep(grid, 2));
    CHECK(records_fingerprint(with_cache) == records_fingerprint(without_cache));
    CHECK(!has_failures(with_cache));
}
