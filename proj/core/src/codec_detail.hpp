#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hitkit/formula.hpp"
#include "text_util.hpp"

namespace hitkit::detail {

// DIMACS clause stream over the given lines; clauses may span lines.
std::vector<Clause> parse_dimacs_body(std::string_view module, std::span<const Line> lines, Var num_vars);
// One xcnf clause line.
XorClause parse_xcnf_line(std::string_view module, const Line& line, Var num_vars);

}  // namespace hitkit::detail
