#pragma once

// Certificate checkers for Hitting, Hitting(⊕), Hitting[k] and Odd Hitting.
//
// A certificate is a candidate refutation H together with, for each clause of
// H, the index of an axiom clause it weakens. A missing mapping means "auto":
// each certificate clause is matched to the first axiom (in axiom order) it
// weakens.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hitkit/formula.hpp"
#include "hitkit/verdict.hpp"

namespace hitkit {

using BigInt = boost::multiprecision::cpp_int;

struct HittingCertificate {
    Cnf hitting;
    std::optional<std::vector<std::size_t>> mapping;  // 0-based axiom index per clause
};

enum class StrengtheningMode {
    syntactic,  // every equation of the axiom occurs literally in the certificate clause
    semantic,   // certificate clause's falsifying subspace lies inside the axiom's
};

struct XcnfCertificate {
    Xcnf hitting;
    std::optional<std::vector<std::size_t>> mapping;
    StrengtheningMode mode = StrengtheningMode::syntactic;
};

// Every pair of clauses clashes. Witness: the lexicographically least
// non-clashing pair.
Verdict is_hitting(const Cnf& h);

// For a hitting formula: Σ_i 2^(n - |H_i|) = 2^n, exactly. Throws
// hitkit::Error if h is not hitting.
Verdict unsat_hitting_check(const Cnf& h);

Verdict verify_hitting(const Cnf& axioms, const HittingCertificate& cert);

// Falsifying subspaces pairwise disjoint.
Verdict is_hitting_xor(const Xcnf& h);
Verdict verify_hitting_xor(const Xcnf& axioms, const XcnfCertificate& cert);

inline constexpr unsigned kMaxHittingK = 4;

// Inclusion–exclusion over the compatible clause sets of size <= k:
// Σ (-1)^(|I|+1) 2^(n - |∪ I|). For a hitting-k formula this is the number of
// falsifying assignments.
BigInt inclusion_exclusion_count(const Cnf& h, unsigned k, Var num_vars);

// 1 <= k <= 4; throws hitkit::Error otherwise.
Verdict verify_hitting_k(const Cnf& axioms, const HittingCertificate& cert, unsigned k);

// No assignment falsifies a positive even number of clauses. Checked per clause C by
// substituting the falsifying assignment of C and testing that the remaining
// pseudomonomials sum to 0 over GF(2).
Verdict is_odd_hitting(const Cnf& h);

// Σ of the certificate's pseudomonomials ≡ 1 over GF(2), plus strengthenings.
Verdict verify_odd_hitting(const Cnf& axioms, const HittingCertificate& cert);

// Certificate files: `p hitcert n m`, m clause lines (DIMACS syntax for
// CNF certificates, xcnf syntax for ⊕ certificates), optional final line
// `map i1 ... im` with 1-based axiom indices. Plain `p cnf` / `p xcnf` files
// are accepted as certificates with automatic mapping.
HittingCertificate parse_hitting_certificate(std::string_view text);
XcnfCertificate parse_xcnf_certificate(std::string_view text);
std::string serialize_certificate(const HittingCertificate& cert);
std::string serialize_certificate(const XcnfCertificate& cert);

}  // namespace hitkit
