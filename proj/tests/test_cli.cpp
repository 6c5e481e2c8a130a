#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

// Runs the tool through the shell, capturing stdout; stderr is discarded.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += "'";
    cmd += OPP_CLI_PATH;
    cmd += "' ";
    cmd += args;
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

TEST_CASE("expand plain output") {
    const auto r = run_cli("expand --series pp --n 6 --format plain");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "1\n4\n12\n32\n76\n168\n");
}

TEST_CASE("expand with modulus") {
    const auto r = run_cli("expand --series pp --n 4 --mod 4 --format plain");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "1\n0\n0\n0\n");
}

TEST_CASE("expand jsonl rows") {
    const auto r = run_cli("expand --series pp --n 2");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    REQUIRE(lines[0] == R"({"n":0,"value":"1"})");
    REQUIRE(lines[1] == R"({"n":1,"value":"4"})");
}

TEST_CASE("expand eta quotient expressions") {
    const auto r = run_cli("expand --series '12 (2)^6 (3)^6 (1)^-14' --n 5 --format plain");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "12\n168\n1356\n8160\n40512\n");

    const auto shifted = run_cli("expand --series '5 * q^2' --n 5 --format plain");
    REQUIRE(shifted.code == 0);
    REQUIRE(shifted.out == "0\n0\n5\n0\n0\n");
}

TEST_CASE("expand argument errors") {
    REQUIRE(run_cli("expand --series pp --n 0").code == 2);
    REQUIRE(run_cli("expand --series zz --n 4").code == 2);
    REQUIRE(run_cli("expand --series pp --n 4 --format csv").code == 2);
    REQUIRE(run_cli("expand --series pp --n 4 --mod 1").code == 2);
}

TEST_CASE("rank folded output") {
    const auto r = run_cli("rank --kind r1 --n 2 --t 3 --format plain");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0 4\n1 4\n2 4\n");
}

TEST_CASE("rank distribution output") {
    const auto r = run_cli("rank --kind r2 --n 2");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    REQUIRE(lines[0] == R"({"m":-1,"count":"3"})");
    REQUIRE(lines[1] == R"({"m":0,"count":"6"})");
    REQUIRE(lines[2] == R"({"m":1,"count":"3"})");

    const auto zero = run_cli("rank --kind r3 --n 0");
    REQUIRE(zero.code == 0);
    REQUIRE(zero.out == R"({"m":0,"count":"1"})" "\n");
}

TEST_CASE("rank argument errors") {
    REQUIRE(run_cli("rank --kind rx --n 2").code == 2);
    REQUIRE(run_cli("rank --kind r1 --n -1").code == 2);
    REQUIRE(run_cli("rank --kind r1 --n 2000").code == 2);
}

TEST_CASE("verify single check") {
    const auto r = run_cli("verify --check identity_3n2 --n 64");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    REQUIRE(lines[0].starts_with(R"({"id":"identity_3n2")"));
    REQUIRE(lines[0].find(R"("pass":true)") != std::string::npos);
    REQUIRE(lines[0].find(R"("N":64)") != std::string::npos);
}

TEST_CASE("verify whole registry") {
    const auto r = run_cli("verify --check all --budget 64");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 29);
    for (const auto& line : lines) {
        REQUIRE(line.find(R"("pass":true)") != std::string::npos);
    }
}

TEST_CASE("verify argument errors") {
    REQUIRE(run_cli("verify --check bogus").code == 2);
    REQUIRE(run_cli("verify --check gauss_identities --param N=0").code == 2);
    REQUIRE(run_cli("verify --check gauss_identities --param N").code == 2);
    // Overrides only apply to a single named check.
    REQUIRE(run_cli("verify --check all --n 10").code == 2);
}

TEST_CASE("scan output") {
    const auto r = run_cli("scan --mod 3 --a-max 4 --n 300");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == R"({"A":3,"B":2,"evidence":100,"heuristic":true})" "\n");
    REQUIRE(run_cli("scan --mod 2 --a-max 1").code == 2);
}

TEST_CASE("output is byte-stable across runs") {
    const auto a = run_cli("expand --series pp --n 50");
    const auto b = run_cli("expand --series pp --n 50");
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
}

TEST_CASE("plain output is exact decimal") {
    const auto r = run_cli("expand --series b --n 200 --format plain");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 200);
    for (const auto& line : lines) {
        CAPTURE(line);
        REQUIRE(is_plain_integer(line));
    }
}

TEST_CASE("budget environment variable") {
    const auto r = run_cli("verify --check gauss_identities", "OPP_BUDGET_N=64");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find(R"("N":128)") != std::string::npos);
    REQUIRE(run_cli("verify --check mod4_all", "OPP_BUDGET_N=abc").code == 2);
}

TEST_CASE("top-level parsing") {
    REQUIRE(run_cli("--help").code == 0);
    REQUIRE(run_cli("").code == 2);
}
