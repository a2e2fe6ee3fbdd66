#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef ORBITASYM_CLI_PATH
#error "ORBITASYM_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string tmp = std::string(ORBITASYM_CLI_PATH) + ".out.tmp";
    const std::string cmd = std::string(ORBITASYM_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(tmp.c_str());
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count emits the full triangle as csv") {
    const RunResult r = run_cli("count --ell 2 --max-n 10 --format csv");
    REQUIRE(r.exit_code == 0);
    std::stringstream ss(r.out);
    std::string line;
    int rows = 0;
    bool header = false;
    while (std::getline(ss, line)) {
        if (rows == 0) header = line == "ell,n,k,count";
        ++rows;
    }
    CHECK(header);
    CHECK(rows == 67);  // header + 66 (n,k) pairs
}

TEST_CASE("identical invocations are byte-identical") {
    const std::string args = "estimate --ell 2 --n 64 --k 8 --exact";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const RunResult c = run_cli("validate-saddle --ell 2 --n 12 --k 3 --grid 64");
    const RunResult d = run_cli("validate-saddle --ell 2 --n 12 --k 3 --grid 64");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("zexpand reports the Z_1^{[2]} terms") {
    const RunResult r = run_cli("zexpand --ell 2 --m 1 --order 2");
    REQUIRE(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    bool saw_leading = false, saw_log = false;
    for (const auto& term : parsed["terms"]) {
        if (term["a"] == -1.0 && term["b"] == 0 &&
            std::abs(term["coeff"].get<double>() - 1.6449340668482264) < 1e-12)
            saw_leading = true;
        if (term["a"] == 0.0 && term["b"] == 1 && term["coeff"].get<double>() == -0.5)
            saw_log = true;
    }
    CHECK(saw_leading);
    CHECK(saw_log);
}

TEST_CASE("estimate --exact reports both logs and their gap") {
    const RunResult r = run_cli("estimate --ell 2 --n 32 --k 5 --exact");
    REQUIRE(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.contains("estimate_log"));
    CHECK(parsed.contains("exact_log"));
    CHECK(parsed.contains("log_ratio"));
    const double gap = parsed["exact_log"].get<double>() - parsed["estimate_log"].get<double>();
    CHECK(std::abs(gap - parsed["log_ratio"].get<double>()) < 1e-12);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("count --ell 2").exit_code == 1);            // missing required flag
    CHECK(run_cli("nonsense").exit_code != 0);                 // unknown subcommand
    CHECK(run_cli("brute --ell 2 --n 9").exit_code == 1);      // guard rejection
    CHECK(run_cli("zeval --ell 1 --alphas 0 --t -1").exit_code == 1);
    CHECK(run_cli("count --ell 2 --max-n 6 --format xml").exit_code == 1);
}

TEST_CASE("environment variables mirror the global flags") {
    const std::string tmp = std::string(ORBITASYM_CLI_PATH) + ".env.tmp";
    const std::string cmd = std::string("ORBITASYM_FORMAT=csv ") + ORBITASYM_CLI_PATH +
                            " count --ell 1 --max-n 1 > " + tmp + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(tmp);
    std::string first;
    std::getline(in, first);
    std::remove(tmp.c_str());
    CHECK(first == "ell,n,k,count");
}

TEST_CASE("constants --special dumps named values") {
    const RunResult r = run_cli("constants --special");
    REQUIRE(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["zeta(0)"] == -0.5);
    CHECK(parsed.contains("gamma_4"));
    CHECK(parsed.contains("K_6"));
}

}  // TEST_SUITE
