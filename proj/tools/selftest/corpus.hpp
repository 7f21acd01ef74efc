#pragma once

// Seeded instance builders and brute-force validity checks shared by the
// acceptance suite and the unit tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "hitkit/formula.hpp"
#include "hitkit/generators.hpp"
#include "hitkit/pit.hpp"
#include "hitkit/random.hpp"

namespace hitkit::selftest {

// count instances with n uniform in [min_n, max_n] and leaf budget uniform in
// [1, max_leaves].
std::vector<TreeHitting> tree_corpus(std::size_t count, Var min_n, Var max_n, std::size_t max_leaves, std::uint64_t seed);

// Terms whose factors are drawn per variable: absent with probability
// 1 - density, otherwise x or 1 - x with equal odds. Coefficients nonzero.
PseudomonomialSum random_sum(SplitMix64& rng, Var n, std::size_t terms, Field field, double density);

// Rewrites that preserve the polynomial: splitting a term on a variable,
// adding a cancelling pair, permuting. Output terms never exceed max_terms
// unless the input already did; with fill, rewriting continues until the
// output has max_terms terms.
PseudomonomialSum equivalent_sum(SplitMix64& rng, const PseudomonomialSum& sum, std::size_t max_terms,
                                 bool fill = false);

// a - b as one sum (b's coefficients negated), terms of a first.
PseudomonomialSum difference(const PseudomonomialSum& a, const PseudomonomialSum& b);

// falsify(inner) ⊆ falsify(outer), by enumeration of {0,1}^n.
bool cube_contains(const Clause& inner, const Clause& outer, Var n);
bool cube_contains(const XorClause& inner, const XorClause& outer, Var n);

// Every certificate clause lies inside its mapped axiom (or inside some
// axiom when the mapping is absent). Out-of-range entries make it invalid.
bool cube_strengthenings(const Cnf& axioms, const Cnf& cert, const std::optional<std::vector<std::size_t>>& mapping);
bool cube_strengthenings(const Xcnf& axioms, const Xcnf& cert, const std::optional<std::vector<std::size_t>>& mapping);

// Σ_i m_i g_i written out term by term, where m_i is the indicator of the
// falsifying subcube of clause i and g_i the raw multiplier.
PseudomonomialSum expand_snsr(const Cnf& f, const std::vector<std::vector<RawTerm>>& multipliers, Field field);

// Same formula with every ⊕-clause's equations replaced by an equivalent
// basis of its negated system (so only semantic strengthening recognizes
// the originals).
Xcnf rebased(const Xcnf& f);

}  // namespace hitkit::selftest
