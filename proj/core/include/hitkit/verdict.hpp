#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hitkit {

enum class Reason {
    none,
    not_hitting,             // a clause pair does not clash / subspaces intersect
    count_mismatch,          // Σ 2^(n - |C|) differs from 2^n
    no_strengthening,        // certificate clause weakens no axiom (or not its mapped one)
    mapping_out_of_range,
    mapping_length,
    jointly_falsifiable,     // k + 1 clauses share a falsifying assignment
    identity_fails,          // polynomial identity check rejected
    even_cover,              // some assignment falsifies an even, nonzero number of clauses
    invalid_tree,
};

std::string_view to_string(Reason reason);

// Outcome of a verification. Witness entries are 1-based clause indices
// (or leaf/path data for trees, as documented by the producer).
struct Verdict {
    bool accepted = true;
    Reason reason = Reason::none;
    std::string message;
    std::vector<std::size_t> witness;
    std::vector<std::pair<std::string, std::string>> stats;

    static Verdict accept() { return {}; }
    static Verdict reject(Reason reason, std::string message, std::vector<std::size_t> witness = {});

    Verdict& stat(std::string key, std::string value);
    Verdict& stat(std::string key, const char* value) { return stat(std::move(key), std::string(value)); }
    template <class T>
    Verdict& stat(std::string key, const T& value) {
        return stat(std::move(key), std::to_string(value));
    }
    // Value of a stat, or empty.
    std::string stat_value(std::string_view key) const;

    // `key: value` lines: accepted, reason, message, witness, then stats.
    std::string report() const;

    explicit operator bool() const noexcept { return accepted; }
};

}  // namespace hitkit
