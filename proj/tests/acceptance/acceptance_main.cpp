// Runs every acceptance criterion and prints one line per criterion.
// Criterion 10 runs the installed-style binary end to end.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "hitkit/generators.hpp"
#include "selftest/acceptance.hpp"

namespace {

hitkit::selftest::CriterionResult run_cli_selftest() {
    hitkit::selftest::CriterionResult r;
    r.id = 10;
    r.title = "hitkit selftest exits 0";
    r.limit_seconds = 300.0;
    const auto start = std::chrono::steady_clock::now();
    const std::string cmd = std::string("\"") + HITKIT_CLI_PATH + "\" selftest";
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    int status = -1;
    if (pipe) {
        char buf[512];
        while (std::fgets(buf, sizeof buf, pipe)) output += buf;
        status = pclose(pipe);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool exited_zero = status == 0;
    const bool summary = output.find("selftest: all criteria passed") != std::string::npos;
    r.passed = exited_zero && summary && r.seconds <= r.limit_seconds;
    r.detail = "exit status " + std::to_string(status) + (summary ? ", summary line present" : ", summary line missing");
    return r;
}

}  // namespace

int main() {
    const std::uint64_t seed = hitkit::default_seed();
    bool ok = true;
    for (int id = 1; id <= hitkit::selftest::kSuiteCriteria; ++id) {
        const auto r = hitkit::selftest::run_criterion(id, seed);
        std::cout << hitkit::selftest::format_result(r) << std::endl;
        ok = ok && r.passed;
    }
    const auto r10 = run_cli_selftest();
    std::cout << hitkit::selftest::format_result(r10) << std::endl;
    ok = ok && r10.passed;
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
    return ok ? 0 : 1;
}
