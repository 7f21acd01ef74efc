#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hitkit::selftest {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;   // checks held and the time limit was met
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::string detail;
};

inline constexpr int kSuiteCriteria = 9;

// Criteria 1..9 of the desk-scale acceptance suite.
CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs 1..9 in order, calling on_result after each.
std::vector<CriterionResult> run_suite(std::uint64_t seed,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

// `PASS  [3] round trip ... 0.41 s (limit 30 s): detail`
std::string format_result(const CriterionResult& r);

}  // namespace hitkit::selftest
