// Command-line front end: drives the verification engine, renders reports
// in json/csv/text, and appends one ledger record per report-producing run.
//
// Exit codes: 0 completed (verdicts are data, not errors), 1 usage error,
// 2 precision/quadrature non-convergence, 3 internal or I/O error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zetaverify/bernoulli.hpp"
#include "zetaverify/contour.hpp"
#include "zetaverify/identity.hpp"
#include "zetaverify/report.hpp"
#include "zetaverify/version.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NRange {
    long lo = 0;
    long hi = 0;
};

// "2..6" or "4"
NRange parse_n_range(const std::string& text) {
    NRange r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stol(text);
        } else {
            r.lo = std::stol(text.substr(0, dots));
            r.hi = std::stol(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("cannot parse n-range '" + text + "' (expected N or LO..HI)");
    }
    if (r.lo > r.hi)
        throw UsageError("empty n-range '" + text + "'");
    return r;
}

void require_range(long value, long lo, long hi, const std::string& what) {
    if (value < lo || value > hi) {
        std::ostringstream os;
        os << what << " must be within [" << lo << ", " << hi << "], got " << value;
        if (what == "n" && value < 2)
            os << " (the identity is stated for n = 2, 3, 4, ...)";
        throw UsageError(os.str());
    }
}

struct RunContext {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> json_payloads;   // always collected for the ledger
    std::vector<std::string> console_lines;
    std::optional<std::string> ledger_path;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void finish() {
        for (const auto& line : console_lines)
            std::cout << line << "\n";
        std::string result = "[";
        for (std::size_t i = 0; i < json_payloads.size(); ++i) {
            if (i)
                result += ",";
            result += json_payloads[i];
        }
        result += "]";
        zv::RunRecord record;
        record.timestamp_utc = zv::utc_timestamp_now();
        record.command = command;
        record.params = params;
        record.result_json = result;
        record.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        record.version = zv::kVersion;
        zv::Ledger(zv::Ledger::resolve_path(ledger_path)).append(record);
    }
};

void emit_identity_style(RunContext& ctx, const std::vector<zv::IdentityReport>& reports,
                         zv::Format format) {
    if (format == zv::Format::Csv)
        ctx.console_lines.push_back(zv::identity_report_csv_header());
    for (const auto& r : reports) {
        ctx.json_payloads.push_back(zv::identity_report_json(r, ctx.command));
        switch (format) {
            case zv::Format::Json:
                ctx.console_lines.push_back(ctx.json_payloads.back());
                break;
            case zv::Format::Csv:
                ctx.console_lines.push_back(zv::identity_report_csv_row(r, ctx.command));
                break;
            case zv::Format::Text:
                ctx.console_lines.push_back(zv::identity_report_text(r, ctx.command));
                break;
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"zetaverify: error-bounded measurements of zeta-value identities"};
    app.set_version_flag("--version", std::string(zv::kVersion));
    app.require_subcommand(1);

    std::string n_text = "2..6";
    int digits = 30;
    std::string format_name = "json";
    std::string ledger_flag;
    long max_p = 5;
    long max_k = 9;
    long contour_k = 3;
    long contour_poles = 1;
    double half_width = 40.0;
    double tol = 1e-12;
    long matrix_n = 2;
    long calibrate_max = 8;
    std::string filter_command;
    std::string filter_since;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--digits", digits, "requested decimal digits (absolute error 10^-digits)");
        sub->add_option("--format", format_name, "output format: json, csv, or text");
        sub->add_option("--ledger-path", ledger_flag,
                        "run-ledger path (overrides ZETAVERIFY_LEDGER; default ./zeta-ledger.jsonl)");
    };

    CLI::App* identity = app.add_subcommand(
        "identity", "measure zeta(4n-1) against the convolution sum for an n-range");
    identity->add_option("--n", n_text, "single n or range LO..HI (n >= 2)");
    add_common(identity);

    CLI::App* constants = app.add_subcommand(
        "constants", "emit A_2p fractions, Bernoulli numbers, zeta(1-2p), odd zeta ratios");
    constants->add_option("--max-p", max_p, "largest p for A_2p and zeta(1-2p)");
    constants->add_option("--max-k", max_k, "largest odd k for zeta(k)/pi^k");
    add_common(constants);

    CLI::App* contour = app.add_subcommand(
        "contour", "rectangle quadrature vs residue sum for one (k, P, X) configuration");
    contour->add_option("--k", contour_k, "integrand exponent k >= 2");
    contour->add_option("--poles", contour_poles, "number of enclosed poles P >= 0");
    contour->add_option("--half-width", half_width, "rectangle half-width X");
    contour->add_option("--tol", tol, "quadrature error budget");
    add_common(contour);

    CLI::App* matrix = app.add_subcommand(
        "matrix", "exact matrix form of the normalized recurrence, with determinant");
    matrix->add_option("--n", matrix_n, "n >= 2");
    add_common(matrix);

    CLI::App* calibrate = app.add_subcommand(
        "calibrate", "run the known-true even-weight crosscheck sweep (pipeline validation)");
    calibrate->add_option("--n-max", calibrate_max, "sweep n = 2..n-max");
    add_common(calibrate);

    CLI::App* ledger_cmd = app.add_subcommand("ledger", "replay ledger records");
    ledger_cmd->add_option("--command", filter_command, "only records of this command");
    ledger_cmd->add_option("--since", filter_since, "only records at/after this ISO-8601 instant");
    ledger_cmd->add_option("--ledger-path", ledger_flag, "ledger path to read");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunContext ctx;
        if (!ledger_flag.empty())
            ctx.ledger_path = ledger_flag;

        if (identity->parsed()) {
            ctx.command = "identity";
            const NRange range = parse_n_range(n_text);
            require_range(range.lo, 2, 64, "n");
            require_range(range.hi, 2, 64, "n");
            require_range(digits, 10, 1000, "digits");
            const zv::Format format = zv::parse_format(format_name);
            ctx.params = {{"n", n_text},
                          {"digits", std::to_string(digits)},
                          {"format", format_name}};
            std::vector<zv::IdentityReport> reports;
            for (long n = range.lo; n <= range.hi; ++n)
                reports.push_back(zv::verify_identity(n, digits));
            emit_identity_style(ctx, reports, format);
            ctx.finish();
            return 0;
        }

        if (calibrate->parsed()) {
            ctx.command = "calibrate";
            if (!calibrate->count("--digits"))
                digits = 40;
            require_range(calibrate_max, 2, 64, "n-max");
            require_range(digits, 10, 1000, "digits");
            const zv::Format format = zv::parse_format(format_name);
            ctx.params = {{"n-max", std::to_string(calibrate_max)},
                          {"digits", std::to_string(digits)},
                          {"format", format_name}};
            std::vector<zv::IdentityReport> reports;
            for (long n = 2; n <= calibrate_max; ++n)
                reports.push_back(zv::euler_even_crosscheck(n, digits));
            emit_identity_style(ctx, reports, format);
            ctx.finish();
            return 0;
        }

        if (constants->parsed()) {
            ctx.command = "constants";
            require_range(max_p, 1, 128, "max-p");
            require_range(max_k, 3, 101, "max-k");
            require_range(digits, 10, 1000, "digits");
            const zv::Format format = zv::parse_format(format_name);
            ctx.params = {{"max-p", std::to_string(max_p)},
                          {"max-k", std::to_string(max_k)},
                          {"digits", std::to_string(digits)},
                          {"format", format_name}};
            const auto rows = zv::constants_rows(max_p, max_k, digits);
            for (const auto& row : rows)
                ctx.json_payloads.push_back(zv::constant_row_json(row));
            switch (format) {
                case zv::Format::Json:
                    ctx.console_lines = ctx.json_payloads;
                    break;
                case zv::Format::Csv:
                    ctx.console_lines.push_back(zv::constants_csv_header());
                    for (const auto& row : rows)
                        ctx.console_lines.push_back(zv::constant_row_csv(row));
                    break;
                case zv::Format::Text:
                    ctx.console_lines.push_back(zv::constants_text(rows));
                    break;
            }
            ctx.finish();
            return 0;
        }

        if (contour->parsed()) {
            ctx.command = "contour";
            require_range(contour_k, 2, 64, "k");
            require_range(contour_poles, 0, 64, "poles");
            require_range(digits, 10, 1000, "digits");
            if (!(half_width >= 0.0) || half_width > 1000.0)
                throw UsageError("half-width must be within [0, 1000]");
            if (!(tol > 0.0) || tol >= 1.0)
                throw UsageError("tol must be within (0, 1)");
            const zv::Format format = zv::parse_format(format_name);
            std::ostringstream hw, tl;
            hw.precision(17);
            tl.precision(17);
            hw << half_width;
            tl << tol;
            ctx.params = {{"k", std::to_string(contour_k)},
                          {"poles", std::to_string(contour_poles)},
                          {"half-width", hw.str()},
                          {"tol", tl.str()},
                          {"digits", std::to_string(digits)},
                          {"format", format_name}};
            const zv::ContourReport report =
                zv::contour_report(contour_k, contour_poles, half_width, digits, tol);
            ctx.json_payloads.push_back(zv::contour_report_json(report));
            switch (format) {
                case zv::Format::Json:
                    ctx.console_lines = ctx.json_payloads;
                    break;
                case zv::Format::Csv:
                    ctx.console_lines.push_back(zv::contour_report_csv_header());
                    ctx.console_lines.push_back(zv::contour_report_csv_row(report));
                    break;
                case zv::Format::Text:
                    ctx.console_lines.push_back(zv::contour_report_text(report));
                    break;
            }
            ctx.finish();
            return 0;
        }

        if (matrix->parsed()) {
            ctx.command = "matrix";
            require_range(matrix_n, 2, 64, "n");
            const zv::Format format = zv::parse_format(format_name);
            ctx.params = {{"n", std::to_string(matrix_n)}, {"format", format_name}};
            ctx.json_payloads.push_back(zv::matrix_report_json(matrix_n));
            switch (format) {
                case zv::Format::Json:
                    ctx.console_lines = ctx.json_payloads;
                    break;
                case zv::Format::Csv:
                    ctx.console_lines.push_back(zv::matrix_report_csv(matrix_n));
                    break;
                case zv::Format::Text:
                    ctx.console_lines.push_back(zv::matrix_report_text(matrix_n));
                    break;
            }
            ctx.finish();
            return 0;
        }

        if (ledger_cmd->parsed()) {
            std::optional<std::string> flag;
            if (!ledger_flag.empty())
                flag = ledger_flag;
            zv::Ledger ledger(zv::Ledger::resolve_path(flag));
            std::optional<std::string> cmd_filter;
            if (!filter_command.empty())
                cmd_filter = filter_command;
            std::optional<std::string> since_filter;
            if (!filter_since.empty())
                since_filter = filter_since;
            for (const auto& line : ledger.read(cmd_filter, since_filter))
                std::cout << line << "\n";
            return 0;
        }

        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const zv::InvalidN& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const zv::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const zv::PrecisionNotAchieved& e) {
        std::cerr << "precision not achieved: " << e.what() << "\n";
        return 2;
    } catch (const zv::QuadratureNoConverge& e) {
        std::cerr << "quadrature did not converge: " << e.what() << "\n";
        return 2;
    } catch (const zv::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
