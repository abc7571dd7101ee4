#include "zetaverify/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zetaverify/bernoulli.hpp"
#include "zetaverify/version.hpp"

namespace zv {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    if (name == "text")
        return Format::Text;
    throw DomainError("unknown format '" + name + "' (expected json, csv, or text)");
}

namespace {

ordered_json ball_json(const PrecisionReal& b) {
    return ordered_json{{"mid", b.midpoint_string()}, {"rad", b.radius_string()}};
}

ordered_json complex_json(const PrecisionComplex& z) {
    return ordered_json{{"re", ball_json(z.re)}, {"im", ball_json(z.im)}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string identity_report_json(const IdentityReport& r, const std::string& command) {
    ordered_json j;
    j["command"] = command;
    j["n"] = r.n;
    j["digits"] = r.digits;
    j["lhs"] = ball_json(r.lhs);
    j["rhs"] = ball_json(r.rhs);
    j["residual"] = ball_json(r.residual);
    j["verdict"] = to_string(r.verdict);
    if (!r.diagnostic.empty())
        j["diagnostic"] = r.diagnostic;
    return j.dump();
}

std::string identity_report_csv_header() {
    return "command,n,digits,lhs_mid,lhs_rad,rhs_mid,rhs_rad,residual_mid,residual_rad,verdict";
}

std::string identity_report_csv_row(const IdentityReport& r, const std::string& command) {
    std::ostringstream os;
    os << command << ',' << r.n << ',' << r.digits << ','
       << r.lhs.midpoint_string() << ',' << r.lhs.radius_string() << ','
       << r.rhs.midpoint_string() << ',' << r.rhs.radius_string() << ','
       << r.residual.midpoint_string() << ',' << r.residual.radius_string() << ','
       << to_string(r.verdict);
    return os.str();
}

std::string identity_report_text(const IdentityReport& r, const std::string& command) {
    std::ostringstream os;
    os << command << " n=" << r.n << " digits=" << r.digits << "\n"
       << "  lhs      = " << r.lhs.to_string() << "\n"
       << "  rhs      = " << r.rhs.to_string() << "\n"
       << "  residual = " << r.residual.to_string() << "\n"
       << "  verdict  = " << to_string(r.verdict) << "\n";
    if (!r.diagnostic.empty())
        os << "  note     = " << r.diagnostic << "\n";
    return os.str();
}

std::string contour_report_json(const ContourReport& r) {
    ordered_json j;
    j["command"] = "contour";
    j["k"] = r.k;
    j["poles"] = r.poles;
    j["half_width"] = r.half_width;
    j["tol"] = r.tol;
    j["digits"] = r.digits;
    j["quadrature"] = complex_json(r.quadrature);
    j["residue_sum"] = complex_json(r.residue);
    j["discrepancy"] = r.discrepancy;
    j["error_estimate"] = r.error_estimate;
    j["evaluations"] = r.evaluations;
    j["pass"] = r.pass;
    return j.dump();
}

std::string contour_report_csv_header() {
    return "command,k,poles,half_width,tol,digits,"
           "quad_re_mid,quad_re_rad,quad_im_mid,quad_im_rad,"
           "residue_re_mid,residue_re_rad,residue_im_mid,residue_im_rad,"
           "discrepancy,error_estimate,evaluations,pass";
}

std::string contour_report_csv_row(const ContourReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "contour," << r.k << ',' << r.poles << ',' << r.half_width << ',' << r.tol << ','
       << r.digits << ','
       << r.quadrature.re.midpoint_string() << ',' << r.quadrature.re.radius_string() << ','
       << r.quadrature.im.midpoint_string() << ',' << r.quadrature.im.radius_string() << ','
       << r.residue.re.midpoint_string() << ',' << r.residue.re.radius_string() << ','
       << r.residue.im.midpoint_string() << ',' << r.residue.im.radius_string() << ','
       << r.discrepancy << ',' << r.error_estimate << ',' << r.evaluations << ','
       << (r.pass ? "true" : "false");
    return os.str();
}

std::string contour_report_text(const ContourReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "contour k=" << r.k << " poles=" << r.poles << " half_width=" << r.half_width
       << " tol=" << r.tol << " digits=" << r.digits << "\n"
       << "  quadrature  re = " << r.quadrature.re.to_string() << "\n"
       << "              im = " << r.quadrature.im.to_string() << "\n"
       << "  residue sum re = " << r.residue.re.to_string() << "\n"
       << "              im = " << r.residue.im.to_string() << "\n"
       << "  discrepancy    = " << r.discrepancy << "\n"
       << "  error estimate = " << r.error_estimate << " (" << r.evaluations << " evaluations)\n"
       << "  result         = " << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::vector<ConstantRow> constants_rows(long max_p, long max_k, int digits) {
    std::vector<ConstantRow> rows;
    for (long p = 1; p <= max_p; ++p) {
        ConstantRow row;
        row.kind = "a_constant";
        row.index = p;
        row.value = a_constant(static_cast<std::size_t>(p)).to_string();
        rows.push_back(row);
    }
    for (long m = 0; m <= 2 * max_p; ++m) {
        ConstantRow row;
        row.kind = "bernoulli";
        row.index = m;
        row.value = bernoulli(static_cast<std::size_t>(m)).to_string();
        rows.push_back(row);
    }
    for (long p = 1; p <= max_p; ++p) {
        ConstantRow row;
        row.kind = "zeta_neg_odd";
        row.index = p;
        row.value = zeta_neg_odd(static_cast<std::size_t>(p)).to_string();
        rows.push_back(row);
    }
    for (long k = 3; k <= max_k; k += 2) {
        ConstantRow row;
        row.kind = "odd_ratio";
        row.index = k;
        OddZetaRatio ratio = odd_ratio(k, digits);
        row.mid = ratio.value.midpoint_string();
        row.rad = ratio.value.radius_string();
        rows.push_back(row);
    }
    return rows;
}

std::string constant_row_json(const ConstantRow& row) {
    ordered_json j;
    j["command"] = "constants";
    j["kind"] = row.kind;
    j["index"] = row.index;
    if (!row.value.empty())
        j["value"] = row.value;
    if (!row.mid.empty()) {
        j["mid"] = row.mid;
        j["rad"] = row.rad;
    }
    return j.dump();
}

std::string constants_csv_header() {
    return "command,kind,index,value,mid,rad";
}

std::string constant_row_csv(const ConstantRow& row) {
    std::ostringstream os;
    os << "constants," << row.kind << ',' << row.index << ',' << csv_escape(row.value) << ','
       << row.mid << ',' << row.rad;
    return os.str();
}

std::string constants_text(const std::vector<ConstantRow>& rows) {
    std::ostringstream os;
    std::string current;
    for (const auto& row : rows) {
        if (row.kind != current) {
            current = row.kind;
            os << current << ":\n";
        }
        os << "  [" << row.index << "] ";
        if (!row.value.empty())
            os << row.value;
        else
            os << row.mid << " ± " << row.rad;
        os << "\n";
    }
    return os.str();
}

namespace {

ordered_json matrix_json_object(long n) {
    RationalMatrix m = build_matrix(n);
    BigRational det = determinant(m);
    ordered_json j;
    j["command"] = "matrix";
    j["n"] = n;
    j["dimension"] = m.rows();
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jcol = 0; jcol < m.cols(); ++jcol)
            row.push_back(m.at(i, jcol).to_string());
        entries.push_back(row);
    }
    j["entries"] = entries;
    j["determinant"] = det.to_string();
    j["invertible"] = !det.is_zero();
    return j;
}

} // namespace

std::string matrix_report_json(long n) {
    return matrix_json_object(n).dump();
}

std::string matrix_report_csv(long n) {
    RationalMatrix m = build_matrix(n);
    BigRational det = determinant(m);
    std::ostringstream os;
    os << "row,col,value\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << i << ',' << j << ',' << csv_escape(m.at(i, j).to_string()) << "\n";
    os << "-1,-1," << csv_escape(det.to_string());
    return os.str();
}

std::string matrix_report_text(long n) {
    RationalMatrix m = build_matrix(n);
    BigRational det = determinant(m);
    std::ostringstream os;
    os << "matrix n=" << n << " dimension=" << m.rows() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << m.at(i, j).to_string();
            if (j + 1 < m.cols())
                os << "  ";
        }
        os << " ]\n";
    }
    os << "  determinant = " << det.to_string() << "\n"
       << "  invertible  = " << (det.is_zero() ? "false" : "true") << "\n";
    return os.str();
}

std::string utc_timestamp_now() {
    using namespace std::chrono;
    const auto now = system_clock::now();
    const auto ms = duration_cast<milliseconds>(now.time_since_epoch()) % 1000;
    const std::time_t t = system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ",
                  tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                  tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms.count()));
    return buf;
}

std::string run_record_to_json_line(const RunRecord& r) {
    ordered_json j;
    j["timestamp"] = r.timestamp_utc;
    j["command"] = r.command;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params)
        params[key] = value;
    j["params"] = params;
    ordered_json result;
    try {
        result = ordered_json::parse(r.result_json);
    } catch (const nlohmann::json::parse_error&) {
        result = r.result_json;  // store verbatim if not valid JSON
    }
    j["result"] = result;
    j["duration_ms"] = r.duration_ms;
    j["version"] = r.version.empty() ? kVersion : r.version;
    return j.dump();
}

Ledger::Ledger(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path Ledger::resolve_path(const std::optional<std::string>& flag_value) {
    if (flag_value && !flag_value->empty())
        return *flag_value;
    if (const char* env = std::getenv("ZETAVERIFY_LEDGER"); env && *env)
        return env;
    return "zeta-ledger.jsonl";
}

void Ledger::append(const RunRecord& record) {
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw IoError("ledger: cannot open '" + path_.string() + "' for append");
    out << run_record_to_json_line(record) << '\n';
    out.flush();
    if (!out)
        throw IoError("ledger: write to '" + path_.string() + "' failed");
}

std::vector<std::string> Ledger::read(const std::optional<std::string>& command,
                                      const std::optional<std::string>& since,
                                      int* skipped) const {
    std::vector<std::string> out;
    std::ifstream in(path_);
    if (!in)
        return out;   // an absent ledger simply has no records
    std::string line;
    int bad = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("command") ||
            !j.contains("timestamp")) {
            ++bad;
            std::cerr << "warning: skipping corrupt ledger line in " << path_.string() << "\n";
            continue;
        }
        if (command && j["command"] != *command)
            continue;
        if (since && j["timestamp"].get<std::string>() < *since)
            continue;
        out.push_back(line);
    }
    if (skipped)
        *skipped = bad;
    return out;
}

} // namespace zv
