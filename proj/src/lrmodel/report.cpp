#include "spherelab/lrmodel/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "json.hpp"
#include "spherelab/errors.hpp"

namespace spherelab::lrmodel {

std::string to_string(Verdict v) { return v == Verdict::match ? "match" : "mismatch"; }

Verdict ReportRow::verdict() const { return std::abs(residual) <= tolerance ? Verdict::match : Verdict::mismatch; }

ReportRow& ComparisonReport::add(std::string label, double model, double oracle, double tolerance, bool enforced) {
    rows.push_back({std::move(label), model, oracle, model - oracle, tolerance, enforced});
    return rows.back();
}

void ComparisonReport::append(const ComparisonReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

bool ComparisonReport::passed() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ReportRow& r) { return !r.enforced || r.verdict() == Verdict::match; });
}

double ComparisonReport::max_enforced_residual() const {
    double m = 0.0;
    for (const auto& r : rows) {
        if (r.enforced) m = std::max(m, std::abs(r.residual));
    }
    return m;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string ComparisonReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["metadata"]["mode"] = metadata.mode;
    doc["metadata"]["table_id"] = metadata.table_id;
    doc["metadata"]["seed"] = metadata.seed ? nlohmann::ordered_json(*metadata.seed) : nlohmann::ordered_json();
    doc["passed"] = passed();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["label"] = r.label;
        row["model"] = r.model;
        row["oracle"] = r.oracle;
        row["residual"] = r.residual;
        row["tolerance"] = r.tolerance;
        row["verdict"] = to_string(r.verdict());
        row["enforced"] = r.enforced;
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

ComparisonReport ComparisonReport::from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        ComparisonReport report;
        const auto& meta = doc.at("metadata");
        report.metadata.mode = meta.at("mode").get<std::string>();
        report.metadata.table_id = meta.at("table_id").get<std::string>();
        if (!meta.at("seed").is_null()) report.metadata.seed = meta.at("seed").get<std::uint64_t>();
        for (const auto& row : doc.at("rows")) {
            ReportRow r{row.at("label").get<std::string>(), row.at("model").get<double>(),
                        row.at("oracle").get<double>(),     row.at("residual").get<double>(),
                        row.at("tolerance").get<double>(),  row.at("enforced").get<bool>()};
            if (to_string(r.verdict()) != row.at("verdict").get<std::string>()) {
                throw FormatError("row '" + r.label + "' has a verdict inconsistent with its residual");
            }
            report.rows.push_back(std::move(r));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("report JSON: ") + e.what());
    }
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string ComparisonReport::to_csv() const {
    std::string out = "label,model,oracle,residual,tolerance,verdict\n";
    for (const auto& r : rows) {
        out += csv_field(r.label) + ',' + format_double(r.model) + ',' + format_double(r.oracle) + ',' +
               format_double(r.residual) + ',' + format_double(r.tolerance) + ',' + to_string(r.verdict()) + '\n';
    }
    return out;
}

}  // namespace spherelab::lrmodel
