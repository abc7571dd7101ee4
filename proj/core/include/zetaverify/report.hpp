#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetaverify/contour.hpp"
#include "zetaverify/identity.hpp"

namespace zv {

enum class Format { Json, Csv, Text };

/// Accepts "json", "csv", "text"; DomainError otherwise.
Format parse_format(const std::string& name);

// --- report payload rendering ------------------------------------------
//
// JSON payloads are deterministic: field order is fixed, balls are rendered
// as decimal strings with the requested digit count, and no timestamp enters
// the payload (timestamps live only in the ledger record).

/// {"command",...,"lhs":{"mid","rad"},"rhs":{...},"residual":{...},"verdict"}
std::string identity_report_json(const IdentityReport& r, const std::string& command);
std::string identity_report_csv_header();
std::string identity_report_csv_row(const IdentityReport& r, const std::string& command);
std::string identity_report_text(const IdentityReport& r, const std::string& command);

std::string contour_report_json(const ContourReport& r);
std::string contour_report_csv_header();
std::string contour_report_csv_row(const ContourReport& r);
std::string contour_report_text(const ContourReport& r);

/// One row of the constants tables: exact values carry `value`, decimal
/// balls carry `mid`/`rad` (the unused fields stay empty).
struct ConstantRow {
    std::string kind;     // "a_constant" | "bernoulli" | "zeta_neg_odd" | "odd_ratio"
    long index = 0;       // p, m, p, or k respectively
    std::string value;    // exact fraction, when applicable
    std::string mid;
    std::string rad;
};

std::vector<ConstantRow> constants_rows(long max_p, long max_k, int digits);
std::string constant_row_json(const ConstantRow& row);
std::string constants_csv_header();
std::string constant_row_csv(const ConstantRow& row);
std::string constants_text(const std::vector<ConstantRow>& rows);

std::string matrix_report_json(long n);
std::string matrix_report_csv(long n);
std::string matrix_report_text(long n);

// --- run ledger ---------------------------------------------------------

/// One persisted record per CLI invocation that produced a report.
struct RunRecord {
    std::string timestamp_utc;   // ISO-8601, e.g. 2026-08-08T12:00:00.123Z
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::string result_json;     // serialized payload: JSON array of objects
    long long duration_ms = 0;
    std::string version;
};

std::string run_record_to_json_line(const RunRecord& r);

/// Current UTC time, ISO-8601 with milliseconds.
std::string utc_timestamp_now();

/// Append-only newline-delimited JSON ledger. Reads tolerate a corrupt
/// trailing partial line (skipped with a warning), so a crash mid-append
/// never poisons earlier records.
class Ledger {
public:
    explicit Ledger(std::filesystem::path path);

    /// flag > ZETAVERIFY_LEDGER env var > ./zeta-ledger.jsonl
    static std::filesystem::path resolve_path(const std::optional<std::string>& flag_value);

    const std::filesystem::path& path() const { return path_; }

    /// Appends one record as a single line. Throws IoError.
    void append(const RunRecord& record);

    /// All intact records, optionally filtered by command and/or a
    /// timestamp lower bound (lexicographic ISO-8601 compare). Corrupt
    /// lines are counted in `skipped` when provided.
    std::vector<std::string> read(const std::optional<std::string>& command = {},
                                  const std::optional<std::string>& since = {},
                                  int* skipped = nullptr) const;

private:
    std::filesystem::path path_;
};

} // namespace zv
