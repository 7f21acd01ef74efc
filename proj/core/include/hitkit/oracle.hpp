#pragma once

// Brute-force ground truth by enumeration of {0,1}^n. Assignments are bit
// masks: bit i-1 holds x_i.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hitkit/formula.hpp"
#include "hitkit/pit.hpp"
#include "hitkit/simulations.hpp"

namespace hitkit {

inline constexpr Var kOracleMaxVars = 24;

struct CoverageProfile {
    Var num_vars = 0;
    // falsified-clause count -> number of assignments with that count
    std::map<std::size_t, std::uint64_t> histogram;
    std::size_t min_count = 0;
    std::size_t max_count = 0;
    std::uint64_t min_witness = 0;  // least assignment attaining the minimum
    std::uint64_t max_witness = 0;  // least assignment attaining the maximum

    bool exactly_once() const noexcept { return min_count == 1 && max_count == 1; }
    bool all_odd() const noexcept;
    bool max_at_most(std::size_t k) const noexcept { return max_count <= k; }
    // Every assignment falsifies a clause, i.e. the formula is unsatisfiable.
    bool total_cover() const noexcept { return min_count >= 1; }
    // Assignments falsifying at least one clause.
    std::uint64_t covered() const noexcept;
};

// Throws hitkit::Error when num_vars exceeds limit (itself capped at 24).
CoverageProfile coverage_profile(const Cnf& f, Var limit = kOracleMaxVars);
CoverageProfile coverage_profile(const Xcnf& f, Var limit = kOracleMaxVars);

std::vector<std::uint8_t> assignment_bits(std::uint64_t mask, Var num_vars);

// Pointwise evaluation of the sum on every cube point against target.
bool eval_sum_on_cube(const PseudomonomialSum& sum, std::uint32_t target, Var limit = kOracleMaxVars);

// Least assignment whose leaf clause it does not falsify (or whose leaf label
// is out of range), if any.
std::optional<std::uint64_t> tree_search_counterexample(const DecisionTree& tree, const Cnf& f);
std::optional<std::uint64_t> tree_search_counterexample(const ParityDecisionTree& tree, const Xcnf& f);

inline bool check_tree_search(const DecisionTree& tree, const Cnf& f) { return !tree_search_counterexample(tree, f); }
inline bool check_tree_search(const ParityDecisionTree& tree, const Xcnf& f) {
    return !tree_search_counterexample(tree, f);
}

}  // namespace hitkit
