#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spherelab::lrmodel {

enum class Verdict { match, mismatch };

std::string to_string(Verdict v);

struct ReportRow {
    std::string label;
    double model = 0.0;
    double oracle = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    /// Informational rows are listed but never fail a comparison.
    bool enforced = true;

    /// match iff |residual| <= tolerance.
    Verdict verdict() const;
    bool operator==(const ReportRow&) const = default;
};

struct ReportMetadata {
    std::string mode;
    std::string table_id;
    std::optional<std::uint64_t> seed;
    bool operator==(const ReportMetadata&) const = default;
};

class ComparisonReport {
public:
    ReportMetadata metadata;
    std::vector<ReportRow> rows;

    /// Appends a row with residual = model − oracle.
    ReportRow& add(std::string label, double model, double oracle, double tolerance, bool enforced = true);
    void append(const ComparisonReport& other);

    /// True when every enforced row matches.
    bool passed() const;
    /// Largest |residual| over enforced rows (0 when there are none).
    double max_enforced_residual() const;

    std::string to_json() const;
    static ComparisonReport from_json(const std::string& text);
    /// Header `label,model,oracle,residual,tolerance,verdict`, one line per row.
    std::string to_csv() const;

    bool operator==(const ComparisonReport&) const = default;
};

/// Shortest round-trip decimal form of `x`.
std::string format_double(double x);

}  // namespace spherelab::lrmodel
