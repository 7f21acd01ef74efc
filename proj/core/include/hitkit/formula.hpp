#pragma once

// CNF and ⊕-CNF data model. Variables are 1-based, as in DIMACS. All types
// are immutable values once constructed.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hitkit/gf2.hpp"

namespace hitkit {

struct Literal {
    Var var = 0;
    bool negative = false;

    // Throws hitkit::Error for 0.
    static Literal from_dimacs(long long code);
    long long dimacs() const noexcept { return negative ? -static_cast<long long>(var) : var; }

    Literal operator~() const noexcept { return {var, !negative}; }
    // Truth value under x_var = value.
    bool satisfied_by(bool value) const noexcept { return value != negative; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// A set of literals, kept sorted by (variable, sign) without duplicates.
// Tautologies are rejected; the empty clause is allowed.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> literals);
    static Clause from_dimacs(std::span<const long long> codes);

    std::span<const Literal> literals() const noexcept { return literals_; }
    std::size_t width() const noexcept { return literals_.size(); }
    bool empty() const noexcept { return literals_.empty(); }
    bool contains(Literal lit) const noexcept;
    Var max_var() const noexcept { return literals_.empty() ? 0 : literals_.back().var; }

    // assignment[v - 1] holds x_v.
    bool falsified_by(std::span<const std::uint8_t> assignment) const noexcept;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> literals_;
};

class Cnf {
public:
    Cnf() = default;
    Cnf(Var num_vars, std::vector<Clause> clauses);

    Var num_vars() const noexcept { return num_vars_; }
    std::span<const Clause> clauses() const noexcept { return clauses_; }
    std::size_t size() const noexcept { return clauses_.size(); }
    const Clause& operator[](std::size_t i) const { return clauses_[i]; }
    std::size_t max_width() const noexcept;

    friend bool operator==(const Cnf&, const Cnf&) = default;

private:
    Var num_vars_ = 0;
    std::vector<Clause> clauses_;
};

// x_{v1} ⊕ ... ⊕ x_{vk} = rhs, with repeated variables cancelled.
struct AffineEquation {
    std::vector<Var> vars;
    bool rhs = false;

    AffineEquation() = default;
    AffineEquation(std::vector<Var> variables, bool value);

    bool constant() const noexcept { return vars.empty(); }
    AffineEquation negated() const { return {vars, !rhs}; }
    bool holds(std::span<const std::uint8_t> assignment) const noexcept;
    Var max_var() const noexcept { return vars.empty() ? 0 : vars.back(); }

    friend bool operator==(const AffineEquation&, const AffineEquation&) = default;
    friend auto operator<=>(const AffineEquation&, const AffineEquation&) = default;
};

// Disjunction of affine equations. Its falsifying set is the solution set of
// the negated equations, an affine subspace. Construction rejects constant
// equations and clauses whose negated system is inconsistent (tautologies).
class XorClause {
public:
    XorClause() = default;
    explicit XorClause(std::vector<AffineEquation> equations);
    static XorClause from_clause(const Clause& clause);

    std::span<const AffineEquation> equations() const noexcept { return equations_; }
    std::size_t size() const noexcept { return equations_.size(); }
    bool empty() const noexcept { return equations_.empty(); }
    Var max_var() const noexcept;

    AffineSystem falsifying_system(std::size_t num_vars) const;
    bool falsified_by(std::span<const std::uint8_t> assignment) const noexcept;

    friend bool operator==(const XorClause&, const XorClause&) = default;

private:
    std::vector<AffineEquation> equations_;
};

class Xcnf {
public:
    Xcnf() = default;
    Xcnf(Var num_vars, std::vector<XorClause> clauses);
    static Xcnf from_cnf(const Cnf& cnf);

    Var num_vars() const noexcept { return num_vars_; }
    std::span<const XorClause> clauses() const noexcept { return clauses_; }
    std::size_t size() const noexcept { return clauses_.size(); }
    const XorClause& operator[](std::size_t i) const { return clauses_[i]; }

    friend bool operator==(const Xcnf&, const Xcnf&) = default;

private:
    Var num_vars_ = 0;
    std::vector<XorClause> clauses_;
};

class PartialAssignment {
public:
    explicit PartialAssignment(Var num_vars = 0) : values_(num_vars, kUnassigned) {}

    Var num_vars() const noexcept { return static_cast<Var>(values_.size()); }
    void assign(Var v, bool value);
    void unassign(Var v);
    std::optional<bool> value(Var v) const noexcept;
    bool assigned(Var v) const noexcept { return value(v).has_value(); }
    // Truth value of a literal, if its variable is assigned.
    std::optional<bool> value(Literal lit) const noexcept;

private:
    static constexpr std::int8_t kUnassigned = -1;
    std::vector<std::int8_t> values_;
};

// Removes satisfied clauses and falsified literals. Emptied clauses stay as
// the empty clause; the variable count is unchanged.
Cnf restrict(const Cnf& formula, const PartialAssignment& rho);

// Least variable occurring with opposite signs in a and b.
std::optional<Var> clash(const Clause& a, const Clause& b);

// True iff strong ⊆ weak as literal sets.
bool is_weakening(const Clause& weak, const Clause& strong);

}  // namespace hitkit
