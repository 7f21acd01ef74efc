#pragma once

// Text formats for formulas.
//
// DIMACS CNF:  `p cnf n m`, then m clauses of signed literals each closed by 0.
//              Clauses may span lines; `c` lines are comments.
//
// xcnf:        `p xcnf n m`, then one ⊕-clause per line. A line holds
//              equation groups separated by `|` and ends with 0. A group
//              `b v1 ... vk` means x_v1 ⊕ ... ⊕ x_vk = b. A group of a single
//              signed token `±v` is shorthand for x_v = 1 (positive) or x_v = 0.
//              A line containing only 0 is the empty ⊕-clause.

#include <string>
#include <string_view>
#include <vector>

#include "hitkit/formula.hpp"

namespace hitkit {

Cnf parse_cnf(std::string_view text);
std::string serialize_cnf(const Cnf& cnf);

Xcnf parse_xcnf(std::string_view text);
std::string serialize_xcnf(const Xcnf& xcnf);

namespace detail {
// Single-clause formatting shared with the certificate codec; no newline.
std::string format_clause(const Clause& clause);
std::string format_xor_clause(const XorClause& clause);
}  // namespace detail

}  // namespace hitkit
