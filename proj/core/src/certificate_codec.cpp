#include <sstream>

#include "codec_detail.hpp"
#include "hitkit/codec.hpp"
#include "hitkit/error.hpp"
#include "hitkit/verifiers.hpp"
#include "text_util.hpp"

namespace hitkit {

namespace {

constexpr const char* kModule = "verifiers";

struct CertificateText {
    std::string kind;  // cnf, xcnf or hitcert
    Var num_vars = 0;
    std::size_t declared = 0;
    std::vector<detail::Line> body;
    std::optional<std::vector<std::size_t>> mapping;
    std::size_t header_line = 1;
};

CertificateText split_certificate(std::string_view text, std::string_view plain_kind) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(kModule, 1, "empty certificate");
    auto header = detail::parse_header(kModule, lines[0], 2);
    if (header.kind != "hitcert" && header.kind != plain_kind)
        throw ParseError(kModule, lines[0].number,
                         "expected `p hitcert` or `p " + std::string(plain_kind) + "`, got `p " + header.kind + "`");
    CertificateText out;
    out.kind = header.kind;
    out.num_vars = static_cast<Var>(header.fields[0]);
    out.declared = static_cast<std::size_t>(header.fields[1]);
    out.header_line = lines[0].number;
    out.body.assign(lines.begin() + 1, lines.end());
    if (!out.body.empty()) {
        const auto& last = out.body.back();
        auto toks = detail::tokens(last.text);
        if (!toks.empty() && toks[0] == "map") {
            if (out.kind != "hitcert") throw ParseError(kModule, last.number, "`map` line only allowed in hitcert files");
            std::vector<std::size_t> map;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const long long idx = detail::expect_integer(kModule, last.number, toks[i]);
                if (idx < 1) throw ParseError(kModule, last.number, "mapping indices are 1-based");
                map.push_back(static_cast<std::size_t>(idx - 1));
            }
            if (map.size() != out.declared)
                throw ParseError(kModule, last.number,
                                 "mapping has " + std::to_string(map.size()) + " entries, expected " + std::to_string(out.declared));
            out.mapping = std::move(map);
            out.body.pop_back();
        }
    }
    for (const auto& line : out.body)
        if (detail::tokens(line.text).front() == "map") throw ParseError(kModule, line.number, "`map` must be the last line");
    return out;
}

void check_count(const CertificateText& cert, std::size_t found) {
    if (found != cert.declared)
        throw ParseError(kModule, cert.header_line,
                         "header declares " + std::to_string(cert.declared) + " clauses, found " + std::to_string(found));
}

void append_mapping(std::ostringstream& out, const std::optional<std::vector<std::size_t>>& mapping) {
    if (!mapping) return;
    out << "map";
    for (auto i : *mapping) out << ' ' << (i + 1);
    out << '\n';
}

}  // namespace

HittingCertificate parse_hitting_certificate(std::string_view text) {
    auto cert = split_certificate(text, "cnf");
    auto clauses = detail::parse_dimacs_body(kModule, cert.body, cert.num_vars);
    check_count(cert, clauses.size());
    return {Cnf(cert.num_vars, std::move(clauses)), std::move(cert.mapping)};
}

XcnfCertificate parse_xcnf_certificate(std::string_view text) {
    auto cert = split_certificate(text, "xcnf");
    std::vector<XorClause> clauses;
    for (const auto& line : cert.body) clauses.push_back(detail::parse_xcnf_line(kModule, line, cert.num_vars));
    check_count(cert, clauses.size());
    return {Xcnf(cert.num_vars, std::move(clauses)), std::move(cert.mapping), StrengtheningMode::syntactic};
}

std::string serialize_certificate(const HittingCertificate& cert) {
    std::ostringstream out;
    out << "p hitcert " << cert.hitting.num_vars() << ' ' << cert.hitting.size() << '\n';
    for (const auto& c : cert.hitting.clauses()) out << detail::format_clause(c) << '\n';
    append_mapping(out, cert.mapping);
    return out.str();
}

std::string serialize_certificate(const XcnfCertificate& cert) {
    std::ostringstream out;
    out << "p hitcert " << cert.hitting.num_vars() << ' ' << cert.hitting.size() << '\n';
    for (const auto& c : cert.hitting.clauses()) out << detail::format_xor_clause(c) << '\n';
    append_mapping(out, cert.mapping);
    return out.str();
}

}  // namespace hitkit
