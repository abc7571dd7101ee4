#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

#ifndef ZV_CLI_PATH
#error "ZV_CLI_PATH must be defined by the build"
#endif

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

fs::path scratch_ledger() {
    static int counter = 0;
    return fs::temp_directory_path() /
           ("zv-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) +
            ".jsonl");
}

CmdResult run_cli(const std::string& args, const fs::path& ledger) {
    const std::string cmd = "ZETAVERIFY_LEDGER=" + ledger.string() + " " + ZV_CLI_PATH + " " +
                            args + " 2>/dev/null";
    CmdResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string::size_type start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos)
            end = text.size();
        if (end > start)
            lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("identity range emits one JSON object per n") {
    const fs::path ledger = scratch_ledger();
    CmdResult r = run_cli("identity --n 2..4 --digits 30 --format json", ledger);
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    long expected_n = 2;
    for (const auto& line : lines) {
        json j = json::parse(line);
        CHECK(j["command"] == "identity");
        CHECK(j["n"] == expected_n++);
        CHECK(j["verdict"] == "FAILS_AT_PRECISION");
    }
    fs::remove(ledger);
}

TEST_CASE("payloads are byte-identical across repeated runs") {
    const fs::path ledger = scratch_ledger();
    CmdResult a = run_cli("identity --n 2..3 --digits 30 --format json", ledger);
    CmdResult b = run_cli("identity --n 2..3 --digits 30 --format json", ledger);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CmdResult c = run_cli("constants --max-p 3 --max-k 5 --format csv", ledger);
    CmdResult d = run_cli("constants --max-p 3 --max-k 5 --format csv", ledger);
    CHECK(c.out == d.out);
    fs::remove(ledger);
}

TEST_CASE("usage errors exit 1 and explain the restriction") {
    const fs::path ledger = scratch_ledger();
    CHECK(run_cli("identity --n 1..2 --digits 30", ledger).exit_code == 1);
    CHECK(run_cli("identity --n 2 --digits 5", ledger).exit_code == 1);
    CHECK(run_cli("identity --n 2 --digits 2000", ledger).exit_code == 1);
    CHECK(run_cli("matrix --n 1", ledger).exit_code == 1);
    CHECK(run_cli("identity --n 2 --format yaml", ledger).exit_code == 1);
    CHECK(run_cli("bogus-subcommand", ledger).exit_code == 1);
    CHECK(!fs::exists(ledger));   // failed runs never append
    fs::remove(ledger);
}

TEST_CASE("unreachable quadrature tolerance exits 2") {
    const fs::path ledger = scratch_ledger();
    CmdResult r = run_cli("contour --k 3 --poles 1 --half-width 40 --tol 1e-60", ledger);
    CHECK(r.exit_code == 2);
    fs::remove(ledger);
}

TEST_CASE("an unwritable ledger surfaces as exit 3") {
    CmdResult r = run_cli("matrix --n 2", "/nonexistent-dir/nested/ledger.jsonl");
    CHECK(r.exit_code == 3);
}

TEST_CASE("contour subcommand passes at a reachable tolerance") {
    const fs::path ledger = scratch_ledger();
    CmdResult r = run_cli("contour --k 3 --poles 1 --half-width 40 --tol 1e-12 --format json",
                          ledger);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["discrepancy"].get<double>() <= 1e-11);
    fs::remove(ledger);
}

TEST_CASE("every reporting run appends exactly one ledger record") {
    const fs::path ledger = scratch_ledger();
    run_cli("matrix --n 2", ledger);
    run_cli("matrix --n 3", ledger);
    std::ifstream in(ledger);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        json j = json::parse(line);
        CHECK(j["command"] == "matrix");
        CHECK(j.contains("timestamp"));
        CHECK(j.contains("duration_ms"));
        CHECK(j["version"] == "0.1.0");
        ++count;
    }
    CHECK(count == 2);

    CmdResult replay = run_cli("ledger --command matrix", ledger);
    CHECK(replay.exit_code == 0);
    CHECK(lines_of(replay.out).size() == 2);
    fs::remove(ledger);
}

TEST_CASE("calibrate defaults to digits 40 and holds") {
    const fs::path ledger = scratch_ledger();
    CmdResult r = run_cli("calibrate --n-max 3 --format json", ledger);
    CHECK(r.exit_code == 0);
    for (const auto& line : lines_of(r.out)) {
        json j = json::parse(line);
        CHECK(j["command"] == "calibrate");
        CHECK(j["digits"] == 40);
        CHECK(j["verdict"] == "HOLDS_WITHIN_BOUND");
    }
    fs::remove(ledger);
}

TEST_CASE("version flag") {
    const fs::path ledger = scratch_ledger();
    CmdResult r = run_cli("--version", ledger);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
}
