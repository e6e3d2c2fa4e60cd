#pragma once

/// Structured sweep reports and their JSON / CSV / text renderings.
///
/// CSV columns are fixed: identity,p,a,n,j,k,status,lhs,rhs,elapsed_ms with
/// empty strings for inapplicable parameters.  JSON documents carry
/// "schema_version".

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellcong/congruence.hpp"

namespace bellcong {

bool operator==(const VerificationReport& a, const VerificationReport& b);

struct ReportSummary {
    uint64_t records = 0;
    uint64_t pass = 0;
    uint64_t fail = 0;
    uint64_t skipped_hypothesis = 0;
    uint64_t error = 0;
    std::chrono::nanoseconds total_elapsed{0};

    friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct ReportDocument {
    int schema_version = 1;
    std::string tool_version;
    nlohmann::json config;  // echo of the effective sweep configuration
    std::vector<VerificationReport> records;
    ReportSummary summary;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Assembles a document with its summary computed from the records.
ReportDocument make_report(nlohmann::json config_echo, std::vector<VerificationReport> records);

/// True when any record failed or errored (drives cmd_verify's exit code).
bool has_failures(const ReportDocument& doc);

nlohmann::json report_to_json(const ReportDocument& doc, bool include_timings = true);
ReportDocument report_from_json(const nlohmann::json& j);

std::string report_to_csv(const ReportDocument& doc, bool include_timings = true);
std::string report_to_text(const ReportDocument& doc);

/// One CSV line per record with the timing column left empty: the canonical
/// form for comparing sweep outputs ("identical records, timings excluded").
std::string records_fingerprint(const ReportDocument& doc);

}  // namespace bellcong
