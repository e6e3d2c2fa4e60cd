#include "bellcong/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "bellcong/errors.hpp"
#include "bellcong/version.hpp"

namespace bellcong {

namespace {

std::string opt_str(const std::optional<uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string ms_string(std::chrono::nanoseconds ns) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", static_cast<double>(ns.count()) / 1e6);
    return buf;
}

void append_record_csv(std::string& out, const VerificationReport& r, bool include_timings) {
    out += identity_name(r.c.id);
    out += ',';
    out += opt_str(r.c.p);
    out += ',';
    out += opt_str(r.c.a);
    out += ',';
    out += opt_str(r.c.n);
    out += ',';
    out += opt_str(r.c.j);
    out += ',';
    out += opt_str(r.c.k);
    out += ',';
    out += status_name(r.status);
    out += ',';
    out += csv_escape(r.lhs);
    out += ',';
    out += csv_escape(r.rhs);
    out += ',';
    if (include_timings) out += ms_string(r.elapsed);
    out += '\n';
}

void put_opt(nlohmann::json& j, const char* key, const std::optional<uint64_t>& v) {
    if (v) j[key] = *v;
}

std::optional<uint64_t> get_opt(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    return j.at(key).get<uint64_t>();
}

}  // namespace

bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.c == b.c && a.status == b.status && a.lhs == b.lhs && a.rhs == b.rhs &&
           a.note == b.note && a.elapsed == b.elapsed;
}

ReportDocument make_report(nlohmann::json config_echo, std::vector<VerificationReport> records) {
    ReportDocument doc;
    doc.config = std::move(config_echo);
    doc.tool_version = kToolVersion;
    doc.schema_version = kReportSchemaVersion;
    doc.records = std::move(records);
    for (const VerificationReport& r : doc.records) {
        ++doc.summary.records;
        switch (r.status) {
            case Status::pass: ++doc.summary.pass; break;
            case Status::fail: ++doc.summary.fail; break;
            case Status::skipped_hypothesis: ++doc.summary.skipped_hypothesis; break;
            case Status::error: ++doc.summary.error; break;
        }
        doc.summary.total_elapsed += r.elapsed;
    }
    return doc;
}

bool has_failures(const ReportDocument& doc) {
    return doc.summary.fail > 0 || doc.summary.error > 0;
}

nlohmann::json report_to_json(const ReportDocument& doc, bool include_timings) {
    nlohmann::json j;
    j["schema_version"] = doc.schema_version;
    j["tool_version"] = doc.tool_version;
    j["config"] = doc.config;
    nlohmann::json records = nlohmann::json::array();
    for (const VerificationReport& r : doc.records) {
        nlohmann::json jr;
        jr["identity"] = std::string(identity_name(r.c.id));
        put_opt(jr, "p", r.c.p);
        put_opt(jr, "a", r.c.a);
        put_opt(jr, "n", r.c.n);
        put_opt(jr, "j", r.c.j);
        put_opt(jr, "k", r.c.k);
        jr["status"] = std::string(status_name(r.status));
        jr["lhs"] = r.lhs;
        jr["rhs"] = r.rhs;
        jr["note"] = r.note;
        if (include_timings) jr["elapsed_ns"] = r.elapsed.count();
        records.push_back(std::move(jr));
    }
    j["records"] = std::move(records);
    j["summary"] = {
        {"records", doc.summary.records},
        {"pass", doc.summary.pass},
        {"fail", doc.summary.fail},
        {"skipped_hypothesis", doc.summary.skipped_hypothesis},
        {"error", doc.summary.error},
    };
    if (include_timings) j["summary"]["total_elapsed_ns"] = doc.summary.total_elapsed.count();
    return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
    ReportDocument doc;
    try {
        doc.schema_version = j.at("schema_version").get<int>();
        doc.tool_version = j.at("tool_version").get<std::string>();
        doc.config = j.at("config");
        for (const nlohmann::json& jr : j.at("records")) {
            VerificationReport r;
            const auto id = identity_from_name(jr.at("identity").get<std::string>());
            if (!id) throw ConfigError("unknown identity in report");
            r.c.id = *id;
            r.c.p = get_opt(jr, "p");
            r.c.a = get_opt(jr, "a");
            r.c.n = get_opt(jr, "n");
            r.c.j = get_opt(jr, "j");
            r.c.k = get_opt(jr, "k");
            const auto st = status_from_name(jr.at("status").get<std::string>());
            if (!st) throw ConfigError("unknown status in report");
            r.status = *st;
            r.lhs = jr.at("lhs").get<std::string>();
            r.rhs = jr.at("rhs").get<std::string>();
            r.note = jr.at("note").get<std::string>();
            if (jr.contains("elapsed_ns")) {
                r.elapsed = std::chrono::nanoseconds(jr.at("elapsed_ns").get<int64_t>());
            }
            doc.records.push_back(std::move(r));
        }
        const nlohmann::json& s = j.at("summary");
        doc.summary.records = s.at("records").get<uint64_t>();
        doc.summary.pass = s.at("pass").get<uint64_t>();
        doc.summary.fail = s.at("fail").get<uint64_t>();
        doc.summary.skipped_hypothesis = s.at("skipped_hypothesis").get<uint64_t>();
        doc.summary.error = s.at("error").get<uint64_t>();
        if (s.contains("total_elapsed_ns")) {
            doc.summary.total_elapsed = std::chrono::nanoseconds(s.at("total_elapsed_ns").get<int64_t>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed report document: ") + e.what());
    }
    return doc;
}

std::string report_to_csv(const ReportDocument& doc, bool include_timings) {
    std::string out = "identity,p,a,n,j,k,status,lhs,rhs,elapsed_ms\n";
    for (const VerificationReport& r : doc.records) {
        append_record_csv(out, r, include_timings);
    }
    return out;
}

std::string records_fingerprint(const ReportDocument& doc) {
    std::string out;
    for (const VerificationReport& r : doc.records) {
        append_record_csv(out, r, false);
    }
    return out;
}

std::string report_to_text(const ReportDocument& doc) {
    std::ostringstream out;
    for (const VerificationReport& r : doc.records) {
        out << identity_name(r.c.id);
        if (r.c.p) out << " p=" << *r.c.p;
        if (r.c.a) out << " a=" << *r.c.a;
        if (r.c.n) out << " n=" << *r.c.n;
        if (r.c.j) out << " j=" << *r.c.j;
        if (r.c.k) out << " k=" << *r.c.k;
        out << " status=" << status_name(r.status);
        if (r.status == Status::fail) out << " lhs=" << r.lhs << " rhs=" << r.rhs;
        if (!r.note.empty()) out << " note=\"" << r.note << "\"";
        out << " elapsed_ms=" << ms_string(r.elapsed) << "\n";
    }
    const ReportSummary& s = doc.summary;
    out << "summary: records=" << s.records << " pass=" << s.pass << " fail=" << s.fail
        << " skipped_hypothesis=" << s.skipped_hypothesis << " error=" << s.error
        << " elapsed_ms=" << ms_string(s.total_elapsed) << "\n";
    return out.str();
}

}  // namespace bellcong
