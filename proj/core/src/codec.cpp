#include "hitkit/codec.hpp"

#include <sstream>

#include "codec_detail.hpp"
#include "hitkit/error.hpp"
#include "text_util.hpp"

namespace hitkit {

namespace detail {

std::vector<Clause> parse_dimacs_body(std::string_view module, std::span<const Line> lines, Var num_vars) {
    std::vector<Clause> clauses;
    std::vector<long long> pending;
    std::size_t last_line = 0;
    for (const auto& line : lines) {
        last_line = line.number;
        if (line.text[0] == '%') break;  // SATLIB end marker
        for (auto tok : tokens(line.text)) {
            const long long lit = expect_integer(module, line.number, tok);
            if (lit == 0) {
                try {
                    clauses.push_back(Clause::from_dimacs(pending));
                } catch (const Error& e) {
                    throw ParseError(module, line.number, e.what());
                }
                pending.clear();
                continue;
            }
            const long long magnitude = lit < 0 ? -lit : lit;
            if (magnitude > static_cast<long long>(num_vars))
                throw ParseError(module, line.number,
                                 "literal " + std::to_string(lit) + " out of range (n = " + std::to_string(num_vars) + ")");
            pending.push_back(lit);
        }
    }
    if (!pending.empty()) throw ParseError(module, last_line, "last clause is not terminated by 0");
    return clauses;
}

XorClause parse_xcnf_line(std::string_view module, const Line& line, Var num_vars) {
    auto toks = tokens(line.text);
    if (toks.empty() || toks.back() != "0") throw ParseError(module, line.number, "⊕-clause line must end with 0");
    toks.pop_back();

    std::vector<AffineEquation> equations;
    std::vector<std::string_view> group;
    auto flush = [&]() {
        if (group.empty()) throw ParseError(module, line.number, "empty equation group");
        if (group.size() == 1) {
            const long long lit = expect_integer(module, line.number, group[0]);
            const long long v = lit < 0 ? -lit : lit;
            if (lit == 0 || v > static_cast<long long>(num_vars))
                throw ParseError(module, line.number, "literal " + std::string(group[0]) + " out of range");
            equations.emplace_back(std::vector<Var>{static_cast<Var>(v)}, lit > 0);
        } else {
            const long long b = expect_integer(module, line.number, group[0]);
            if (b != 0 && b != 1)
                throw ParseError(module, line.number, "malformed group: right-hand side must be 0 or 1");
            std::vector<Var> vars;
            for (std::size_t i = 1; i < group.size(); ++i) {
                const long long v = expect_integer(module, line.number, group[i]);
                if (v <= 0 || v > static_cast<long long>(num_vars))
                    throw ParseError(module, line.number, "malformed group: variable " + std::string(group[i]) + " out of range");
                vars.push_back(static_cast<Var>(v));
            }
            AffineEquation eq(std::move(vars), b == 1);
            if (eq.constant()) throw ParseError(module, line.number, "malformed group: variables cancel to a constant");
            equations.push_back(std::move(eq));
        }
        group.clear();
    };
    if (!toks.empty()) {
        for (auto tok : toks) {
            if (tok == "|")
                flush();
            else
                group.push_back(tok);
        }
        flush();
    }
    try {
        return XorClause(std::move(equations));
    } catch (const Error& e) {
        throw ParseError(module, line.number, e.what());
    }
}

std::string format_clause(const Clause& clause) {
    std::string out;
    for (Literal l : clause.literals()) out += std::to_string(l.dimacs()) + ' ';
    out += '0';
    return out;
}

std::string format_xor_clause(const XorClause& clause) {
    std::string out;
    bool first = true;
    for (const auto& eq : clause.equations()) {
        if (!first) out += "| ";
        first = false;
        if (eq.vars.size() == 1) {
            out += std::to_string(eq.rhs ? static_cast<long long>(eq.vars[0]) : -static_cast<long long>(eq.vars[0]));
        } else {
            out += eq.rhs ? '1' : '0';
            for (Var v : eq.vars) out += ' ' + std::to_string(v);
        }
        out += ' ';
    }
    out += '0';
    return out;
}

}  // namespace detail

namespace {
constexpr const char* kModule = "formula-core";

Var checked_num_vars(const detail::Line& header, long long n) {
    if (n > static_cast<long long>(UINT32_MAX - 1)) throw ParseError(kModule, header.number, "variable count too large");
    return static_cast<Var>(n);
}
}  // namespace

Cnf parse_cnf(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(kModule, 1, "missing `p cnf` header");
    auto header = detail::parse_header(kModule, lines[0], 2);
    if (header.kind != "cnf") throw ParseError(kModule, lines[0].number, "expected `p cnf`, got `p " + header.kind + "`");
    const Var n = checked_num_vars(lines[0], header.fields[0]);
    auto clauses = detail::parse_dimacs_body(kModule, std::span(lines).subspan(1), n);
    if (clauses.size() != static_cast<std::size_t>(header.fields[1]))
        throw ParseError(kModule, lines[0].number,
                         "header declares " + std::to_string(header.fields[1]) + " clauses, found " +
                             std::to_string(clauses.size()));
    return Cnf(n, std::move(clauses));
}

std::string serialize_cnf(const Cnf& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.num_vars() << ' ' << cnf.size() << '\n';
    for (const auto& c : cnf.clauses()) out << detail::format_clause(c) << '\n';
    return out.str();
}

Xcnf parse_xcnf(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(kModule, 1, "missing `p xcnf` header");
    auto header = detail::parse_header(kModule, lines[0], 2);
    if (header.kind != "xcnf") throw ParseError(kModule, lines[0].number, "expected `p xcnf`, got `p " + header.kind + "`");
    const Var n = checked_num_vars(lines[0], header.fields[0]);
    std::vector<XorClause> clauses;
    for (std::size_t i = 1; i < lines.size(); ++i) clauses.push_back(detail::parse_xcnf_line(kModule, lines[i], n));
    if (clauses.size() != static_cast<std::size_t>(header.fields[1]))
        throw ParseError(kModule, lines[0].number,
                         "header declares " + std::to_string(header.fields[1]) + " clauses, found " +
                             std::to_string(clauses.size()));
    return Xcnf(n, std::move(clauses));
}

std::string serialize_xcnf(const Xcnf& xcnf) {
    std::ostringstream out;
    out << "p xcnf " << xcnf.num_vars() << ' ' << xcnf.size() << '\n';
    for (const auto& c : xcnf.clauses()) out << detail::format_xor_clause(c) << '\n';
    return out.str();
}

}  // namespace hitkit
