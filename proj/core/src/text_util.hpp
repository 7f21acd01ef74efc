#pragma once

// Line/token helpers shared by the text codecs. Internal header.

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitkit/error.hpp"

namespace hitkit::detail {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;
};

// Splits on LF, strips a trailing CR, drops blank lines and `c` comments.
inline std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos) {
            line = line.substr(first);
            const bool comment = line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t');
            if (!comment) out.push_back({number, line});
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

// Whitespace tokens; `|` is always a token on its own.
inline std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '|') {
            out.push_back(line.substr(i, 1));
            ++i;
        } else {
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '|') ++j;
            out.push_back(line.substr(i, j - i));
            i = j;
        }
    }
    return out;
}

inline std::optional<long long> to_integer(std::string_view token) {
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
    return value;
}

inline long long expect_integer(std::string_view module, std::size_t line, std::string_view token) {
    auto v = to_integer(token);
    if (!v) throw ParseError(module, line, "expected an integer, got '" + std::string(token) + "'");
    return *v;
}

struct Header {
    std::string kind;
    std::vector<long long> fields;
};

// Parses `p <kind> <int> <int> ...`.
inline Header parse_header(std::string_view module, const Line& line, std::size_t num_fields) {
    auto toks = tokens(line.text);
    if (toks.size() != num_fields + 2 || toks[0] != "p")
        throw ParseError(module, line.number, "malformed header '" + std::string(line.text) + "'");
    Header h{std::string(toks[1]), {}};
    for (std::size_t i = 2; i < toks.size(); ++i) {
        const long long v = expect_integer(module, line.number, toks[i]);
        if (v < 0) throw ParseError(module, line.number, "negative header field");
        h.fields.push_back(v);
    }
    return h;
}

}  // namespace hitkit::detail
