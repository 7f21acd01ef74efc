#pragma once

// Deterministic identity testing for sums of pseudomonomials modulo
// x^2 = x and x + x̄ = 1.
//
// A pseudomonomial is c · Π_i P_i(x_i) with P_i ∈ {1, x_i, 1 - x_i}. The test
// folds the variables in ascending order into a "layer": after merging
// x_1..x_i, every term's prefix product is written as a linear form over the
// constant 1 and a basis y_1..y_k of the span of all prefix products. Merging
// x_{i+1} rewrites each form over the spanning family {u, u·x_{i+1}} and
// extracts a fresh basis by Gaussian elimination over the field. After the last
// variable the sum is linear in the final basis; it equals the target iff
// every basis coefficient cancels and the constant equals the target.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hitkit/formula.hpp"
#include "hitkit/verdict.hpp"

namespace hitkit {

// GF(2) or GF(p) for an odd prime p < 2^31.
class Field {
public:
    static Field gf2() { return Field(2); }
    // Throws hitkit::Error unless p is 2 or an odd prime below 2^31.
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_gf2() const noexcept { return p_ == 2; }

    std::uint32_t reduce(long long value) const noexcept;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

enum class Factor : std::uint8_t { pos, neg };  // x_v, 1 - x_v

struct PseudoFactor {
    Var var;
    Factor kind;
    friend auto operator<=>(const PseudoFactor&, const PseudoFactor&) = default;
};

struct Pseudomonomial {
    std::vector<PseudoFactor> factors;  // sorted by variable, one per variable
    std::uint32_t coefficient = 1;      // nonzero, reduced in the field
};

struct PseudomonomialSum {
    Field field = Field::gf2();
    Var num_vars = 0;
    std::vector<Pseudomonomial> terms;
};

// Unnormalized input term: coefficient times signed factors, +v for x_v and
// -v for 1 - x_v. Factors may repeat.
struct RawTerm {
    long long coefficient = 1;
    std::vector<long long> factors;
};

// Collapses repeated factors, drops terms containing x·(1 - x) or a zero
// coefficient, reduces coefficients. Like terms are kept separate.
PseudomonomialSum normalize(std::span<const RawTerm> raw_terms, Var num_vars, Field field);

// Clause translation: a negative literal becomes x_v, a positive one 1 - x_v,
// so the pseudomonomial is the indicator of the clause's falsifying subcube.
Pseudomonomial clause_pseudomonomial(const Clause& clause);
PseudomonomialSum clauses_sum(std::span<const Clause> clauses, Var num_vars, Field field = Field::gf2());

// Factor a term contributes at the next variable.
enum class StepFactor : std::uint8_t { one, pos, neg };

// Per-term linear forms over the current layer. Column 0 is the constant 1,
// column c >= 1 is layer variable y_c. All rows have `width` entries.
struct LayerRows {
    std::size_t width = 1;
    std::vector<std::vector<std::uint32_t>> rows;
};

// Audit record of one merge. definitions[k] is y_{k+1} of the new layer as
// coordinates over the spanning family of the previous layer: entry c is the
// coefficient of u_c, entry width + c that of u_c · x, where u_0 = 1.
struct LayerBasis {
    Var variable = 0;
    std::size_t previous_width = 1;
    std::vector<std::vector<std::uint32_t>> definitions;

    std::size_t size() const noexcept { return definitions.size(); }
};

struct LayerMerge {
    LayerRows rows;
    LayerBasis basis;
};

LayerMerge merge_layer(const LayerRows& current, std::span<const StepFactor> next, Var next_var, const Field& field);

struct PitOptions {
#ifdef NDEBUG
    bool audit = false;
#else
    bool audit = true;
#endif
    // Cube points used per merge when auditing.
    unsigned audit_points = 16;
};

struct PitResult {
    bool identical = false;
    std::size_t terms = 0;
    std::size_t max_layer = 0;
    std::vector<std::size_t> layer_sizes;  // basis size after each merged variable
};

// True iff the sum equals `target` as a multilinear polynomial, which is the
// same as pointwise equality on {0,1}^n.
bool pit_check(const PseudomonomialSum& sum, std::uint32_t target, const PitOptions& options = {});
PitResult pit_check_detailed(const PseudomonomialSum& sum, std::uint32_t target, const PitOptions& options = {});

// Succinct Nullstellensatz-with-duals certificate: one multiplier polynomial
// per clause of the axiom formula, each a list of raw monomials.
struct SnsrProof {
    Var num_vars = 0;
    std::vector<std::vector<RawTerm>> multipliers;
};

// Accepts iff Σ_i m_i · g_i ≡ 1, with m_i the clause pseudomonomial.
// Throws hitkit::Error on an empty proof or an out-of-range variable.
Verdict verify_succinct_nsr(const Cnf& formula, const SnsrProof& proof, Field field = Field::gf2());

// `p snsr n m`, then per clause `i : k` followed by k monomial lines
// `[* c] ±v ... 0`; +v is x_v, -v is 1 - x_v, the empty monomial is 1.
SnsrProof parse_snsr(std::string_view text);
std::string serialize_snsr(const SnsrProof& proof);

}  // namespace hitkit
