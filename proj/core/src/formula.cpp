#include "hitkit/formula.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hitkit/error.hpp"

namespace hitkit {

namespace {
constexpr const char* kModule = "formula-core";
}

Literal Literal::from_dimacs(long long code) {
    if (code == 0) throw Error(kModule, "literal 0 is reserved as the clause terminator");
    const long long magnitude = code < 0 ? -code : code;
    if (magnitude > static_cast<long long>(UINT32_MAX)) throw Error(kModule, "literal " + std::to_string(code) + " too large");
    return {static_cast<Var>(magnitude), code < 0};
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if (literals_[i].var == 0) throw Error(kModule, "variable index 0");
        if (i > 0 && literals_[i - 1].var == literals_[i].var)
            throw Error(kModule, "tautological clause on variable " + std::to_string(literals_[i].var));
    }
}

Clause Clause::from_dimacs(std::span<const long long> codes) {
    std::vector<Literal> lits;
    lits.reserve(codes.size());
    for (long long c : codes) lits.push_back(Literal::from_dimacs(c));
    return Clause(std::move(lits));
}

bool Clause::contains(Literal lit) const noexcept {
    return std::binary_search(literals_.begin(), literals_.end(), lit);
}

bool Clause::falsified_by(std::span<const std::uint8_t> assignment) const noexcept {
    return std::none_of(literals_.begin(), literals_.end(),
                        [&](Literal l) { return l.satisfied_by(assignment[l.var - 1] != 0); });
}

Cnf::Cnf(Var num_vars, std::vector<Clause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
    for (std::size_t i = 0; i < clauses_.size(); ++i)
        if (clauses_[i].max_var() > num_vars_)
            throw Error(kModule, "clause " + std::to_string(i + 1) + " uses variable " +
                                     std::to_string(clauses_[i].max_var()) + " > n = " + std::to_string(num_vars_));
}

std::size_t Cnf::max_width() const noexcept {
    std::size_t w = 0;
    for (const auto& c : clauses_) w = std::max(w, c.width());
    return w;
}

AffineEquation::AffineEquation(std::vector<Var> variables, bool value) : vars(std::move(variables)), rhs(value) {
    std::sort(vars.begin(), vars.end());
    std::vector<Var> kept;
    kept.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size();) {
        std::size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        if (vars[i] == 0) throw Error(kModule, "variable index 0");
        if ((j - i) % 2 == 1) kept.push_back(vars[i]);
        i = j;
    }
    vars = std::move(kept);
}

bool AffineEquation::holds(std::span<const std::uint8_t> assignment) const noexcept {
    bool acc = false;
    for (Var v : vars) acc ^= assignment[v - 1] != 0;
    return acc == rhs;
}

XorClause::XorClause(std::vector<AffineEquation> equations) : equations_(std::move(equations)) {
    std::sort(equations_.begin(), equations_.end());
    equations_.erase(std::unique(equations_.begin(), equations_.end()), equations_.end());
    for (const auto& e : equations_)
        if (e.constant()) throw Error(kModule, "constant equation inside a ⊕-clause");
    if (!echelonize(falsifying_system(max_var())).consistent)
        throw Error(kModule, "tautological ⊕-clause (negated system inconsistent)");
}

XorClause XorClause::from_clause(const Clause& clause) {
    std::vector<AffineEquation> eqs;
    eqs.reserve(clause.width());
    for (Literal l : clause.literals()) eqs.emplace_back(std::vector<Var>{l.var}, !l.negative);
    return XorClause(std::move(eqs));
}

Var XorClause::max_var() const noexcept {
    Var m = 0;
    for (const auto& e : equations_) m = std::max(m, e.max_var());
    return m;
}

AffineSystem XorClause::falsifying_system(std::size_t num_vars) const {
    AffineSystem sys(num_vars);
    for (const auto& e : equations_) sys.add_equation(e.vars, !e.rhs);
    return sys;
}

bool XorClause::falsified_by(std::span<const std::uint8_t> assignment) const noexcept {
    return std::none_of(equations_.begin(), equations_.end(), [&](const AffineEquation& e) { return e.holds(assignment); });
}

Xcnf::Xcnf(Var num_vars, std::vector<XorClause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
    for (std::size_t i = 0; i < clauses_.size(); ++i)
        if (clauses_[i].max_var() > num_vars_)
            throw Error(kModule, "⊕-clause " + std::to_string(i + 1) + " uses variable " +
                                     std::to_string(clauses_[i].max_var()) + " > n = " + std::to_string(num_vars_));
}

Xcnf Xcnf::from_cnf(const Cnf& cnf) {
    std::vector<XorClause> clauses;
    clauses.reserve(cnf.size());
    for (const auto& c : cnf.clauses()) clauses.push_back(XorClause::from_clause(c));
    return Xcnf(cnf.num_vars(), std::move(clauses));
}

void PartialAssignment::assign(Var v, bool value) {
    if (v == 0 || v > values_.size()) throw Error(kModule, "assignment to variable " + std::to_string(v) + " out of range");
    values_[v - 1] = value ? 1 : 0;
}

void PartialAssignment::unassign(Var v) {
    if (v == 0 || v > values_.size()) throw Error(kModule, "variable " + std::to_string(v) + " out of range");
    values_[v - 1] = kUnassigned;
}

std::optional<bool> PartialAssignment::value(Var v) const noexcept {
    if (v == 0 || v > values_.size() || values_[v - 1] == kUnassigned) return std::nullopt;
    return values_[v - 1] == 1;
}

std::optional<bool> PartialAssignment::value(Literal lit) const noexcept {
    auto v = value(lit.var);
    if (!v) return std::nullopt;
    return lit.satisfied_by(*v);
}

Cnf restrict(const Cnf& formula, const PartialAssignment& rho) {
    std::vector<Clause> out;
    out.reserve(formula.size());
    for (const auto& clause : formula.clauses()) {
        std::vector<Literal> kept;
        bool satisfied = false;
        for (Literal l : clause.literals()) {
            auto val = rho.value(l);
            if (!val) {
                kept.push_back(l);
            } else if (*val) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) out.emplace_back(std::move(kept));
    }
    return Cnf(formula.num_vars(), std::move(out));
}

std::optional<Var> clash(const Clause& a, const Clause& b) {
    auto x = a.literals(), y = b.literals();
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].var < y[j].var) {
            ++i;
        } else if (y[j].var < x[i].var) {
            ++j;
        } else {
            if (x[i].negative != y[j].negative) return x[i].var;
            ++i;
            ++j;
        }
    }
    return std::nullopt;
}

bool is_weakening(const Clause& weak, const Clause& strong) {
    return std::includes(weak.literals().begin(), weak.literals().end(), strong.literals().begin(),
                         strong.literals().end());
}

}  // namespace hitkit
