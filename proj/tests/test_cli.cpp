#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "ffext/polygon.hpp"

// Contract tests for the command-line surface: exit codes, deterministic
// byte-identical output, and reparseable polygons.

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string cmd = std::string(FFEXT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("exit codes: 0 success, 1 domain error, 2 usage, 3 budget") {
    CHECK(run_cli("polygon --p \"(1/2^(2),0)\"").exit_code == 0);
    CHECK(run_cli("polygon --p \"(0,1)\"").exit_code == 1);       // bad slope order
    CHECK(run_cli("kottwitz --n 3 --k 0 --delta \"(0)\"").exit_code == 1);  // rank mismatch
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("kottwitz --n 7").exit_code == 2);              // missing required flags
    CHECK(run_cli("kottwitz --n 14 --k 0 --delta \"(3/7^(8),-4/7^(6))\" --max-candidates 5")
              .exit_code == 3);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string args = "kottwitz --n 7 --k -1 --delta \"(3/7^(3),-4/7^(4))\"";
    const Run a = run_cli(args);
    const Run b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("report envelope and reparseable polygons") {
    const Run r = run_cli("ext-enum --c \"(0,-1/6^(6))\" --d \"(-1/3^(3))\"");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "ext-enum");
    CHECK(j.contains("inputs"));
    CHECK(j.contains("version"));
    for (const auto& e : j["result"]["elements"]) {
        const auto p = ffext::parse_polygon(e.get<std::string>());
        CHECK(ffext::format_polygon(p) == e.get<std::string>());
    }
}

TEST_CASE("pretty mode renders human tables, not JSON") {
    const Run plain = run_cli("strata --n 10 --r 4 --summary");
    const Run pretty = run_cli("strata --n 10 --r 4 --summary --pretty");
    REQUIRE(plain.exit_code == 0);
    REQUIRE(pretty.exit_code == 0);
    CHECK(nlohmann::json::parse(plain.out)["result"]["summary"]["nonempty"] == 26);
    CHECK(pretty.out.find("nonempty") != std::string::npos);
    CHECK(pretty.out.find("26") != std::string::npos);
    CHECK(nlohmann::json::parse(pretty.out, nullptr, false).is_discarded());
}
