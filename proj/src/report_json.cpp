#include "pythag/report_json.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace pythag::report_json {

namespace {

void append_number(std::string& out, double v) {
    if (!std::isfinite(v)) throw std::runtime_error("report contains a non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void append_u64(std::string& out, std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%" PRIu64, v);
    out += buf;
}

void append_digest(std::string& out, std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
    out += buf;
}

std::uint64_t parse_digest(const std::string& hex) {
    if (hex.size() != 16) throw std::runtime_error("input digest must be 16 hex characters");
    return std::stoull(hex, nullptr, 16);
}

}  // namespace

std::string format_number(double v) {
    std::string out;
    append_number(out, v);
    return out;
}

std::string to_json(const verify::VerifyReport& report) {
    std::string out;
    out.reserve(64 + report.per_case.size() * 96);
    out += "{\"suite\":\"";
    out += report.suite;
    out += "\",\"seed\":";
    append_u64(out, report.seed);
    out += ",\"tolerance\":";
    append_number(out, report.tolerance);
    out += ",\"cases\":";
    append_u64(out, report.cases);
    out += ",\"failures\":";
    append_u64(out, report.failures);
    out += ",\"max_residual\":";
    append_number(out, report.max_residual);
    out += ",\"per_case\":[";
    bool first = true;
    for (const auto& c : report.per_case) {
        if (!first) out += ',';
        first = false;
        out += "{\"input\":\"";
        append_digest(out, c.input_digest);
        out += "\",\"lhs\":";
        append_number(out, c.lhs);
        out += ",\"rhs\":";
        append_number(out, c.rhs);
        out += ",\"residual\":";
        append_number(out, c.residual);
        out += '}';
    }
    out += "]}";
    return out;
}

verify::VerifyReport verify_report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("report parse error: ") + e.what());
    }
    verify::VerifyReport report;
    report.suite = j.at("suite").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.tolerance = j.at("tolerance").get<double>();
    report.cases = j.at("cases").get<std::uint64_t>();
    report.failures = j.at("failures").get<std::uint64_t>();
    report.max_residual = j.at("max_residual").get<double>();
    for (const auto& c : j.at("per_case")) {
        verify::CaseResult r;
        r.input_digest = parse_digest(c.at("input").get<std::string>());
        r.lhs = c.at("lhs").get<double>();
        r.rhs = c.at("rhs").get<double>();
        r.residual = c.at("residual").get<double>();
        report.per_case.push_back(r);
    }
    return report;
}

std::string to_json(const proj::ProjectionReport& report, const std::string& kind, int n, int m) {
    std::string out;
    out.reserve(128 + report.per_index.size() * 48);
    out += "{\"kind\":\"";
    out += kind;
    out += "\",\"n\":";
    append_u64(out, static_cast<std::uint64_t>(n));
    out += ",\"m\":";
    append_u64(out, static_cast<std::uint64_t>(m));
    out += ",\"total\":";
    append_number(out, report.total);
    out += ",\"identity_lhs\":";
    append_number(out, report.identity_lhs);
    out += ",\"identity_rhs\":";
    append_number(out, report.identity_rhs);
    out += ",\"residual\":";
    append_number(out, report.residual);
    out += ",\"per_index\":[";
    bool first = true;
    for (const auto& [index, volume] : report.per_index) {
        if (!first) out += ',';
        first = false;
        out += "{\"index\":[";
        for (std::size_t i = 0; i < index.idx.size(); ++i) {
            if (i > 0) out += ',';
            append_u64(out, static_cast<std::uint64_t>(index.idx[i]));
        }
        out += "],\"volume\":";
        append_number(out, volume);
        out += '}';
    }
    out += "]}";
    return out;
}

}  // namespace pythag::report_json
