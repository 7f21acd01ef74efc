#include "hitkit/verdict.hpp"

#include <sstream>

namespace hitkit {

std::string_view to_string(Reason reason) {
    switch (reason) {
        case Reason::none: return "none";
        case Reason::not_hitting: return "not_hitting";
        case Reason::count_mismatch: return "count_mismatch";
        case Reason::no_strengthening: return "no_strengthening";
        case Reason::mapping_out_of_range: return "mapping_out_of_range";
        case Reason::mapping_length: return "mapping_length";
        case Reason::jointly_falsifiable: return "jointly_falsifiable";
        case Reason::identity_fails: return "identity_fails";
        case Reason::even_cover: return "even_cover";
        case Reason::invalid_tree: return "invalid_tree";
    }
    return "unknown";
}

Verdict Verdict::reject(Reason reason, std::string message, std::vector<std::size_t> witness) {
    Verdict v;
    v.accepted = false;
    v.reason = reason;
    v.message = std::move(message);
    v.witness = std::move(witness);
    return v;
}

Verdict& Verdict::stat(std::string key, std::string value) {
    for (auto& [k, v] : stats) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    stats.emplace_back(std::move(key), std::move(value));
    return *this;
}

std::string Verdict::stat_value(std::string_view key) const {
    for (const auto& [k, v] : stats)
        if (k == key) return v;
    return {};
}

std::string Verdict::report() const {
    std::ostringstream out;
    out << "accepted: " << (accepted ? "yes" : "no") << '\n';
    out << "reason: " << to_string(reason) << '\n';
    if (!message.empty()) out << "message: " << message << '\n';
    if (!witness.empty()) {
        out << "witness:";
        for (auto w : witness) out << ' ' << w;
        out << '\n';
    }
    for (const auto& [k, v] : stats) out << k << ": " << v << '\n';
    return out.str();
}

}  // namespace hitkit
