#include "hitkit/simulations.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "hitkit/error.hpp"
#include "hitkit/gf2.hpp"

namespace hitkit {

namespace {

constexpr const char* kModule = "simulations";

class TreeBuilder {
public:
    TreeBuilder(const Cnf& h, TreeBuildStats* stats) : h_(h), stats_(stats), value_(h.num_vars() + 1, -1) {}

    DecisionTree build() {
        std::vector<std::size_t> live(h_.size());
        for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
        tree_.set_root(grow(live));
        return std::move(tree_);
    }

private:
    bool falsified(Literal l) const { return value_[l.var] != -1 && !l.satisfied_by(value_[l.var] == 1); }
    bool satisfied(Literal l) const { return value_[l.var] != -1 && l.satisfied_by(value_[l.var] == 1); }

    std::size_t open_width(const Clause& c) const {
        std::size_t w = 0;
        for (Literal l : c.literals())
            if (value_[l.var] == -1) ++w;
        return w;
    }

    NodeId grow(const std::vector<std::size_t>& live) {
        if (live.empty()) throw Error(kModule, "restricted formula became satisfiable; input is not an unsat hitting formula");

        std::size_t narrowest = live.front();
        std::size_t best_width = open_width(h_[narrowest]);
        for (std::size_t idx : live) {
            const std::size_t w = open_width(h_[idx]);
            if (w == 0) return tree_.add_leaf(idx);
            if (w < best_width) {
                best_width = w;
                narrowest = idx;
            }
        }

        Literal chosen{};
        std::size_t best_count = 0;
        bool have = false;
        for (Literal l : h_[narrowest].literals()) {
            if (value_[l.var] != -1) continue;
            std::size_t count = 0;
            for (std::size_t idx : live)
                if (h_[idx].contains(~l)) ++count;
            if (!have || count > best_count) {
                chosen = l;
                best_count = count;
                have = true;
            }
        }
        if (stats_) stats_->splits.push_back({live.size(), best_width, best_count});

        const Var x = chosen.var;
        NodeId children[2];
        for (int b = 0; b < 2; ++b) {
            value_[x] = static_cast<std::int8_t>(b);
            std::vector<std::size_t> next;
            next.reserve(live.size());
            for (std::size_t idx : live) {
                const Clause& c = h_[idx];
                const bool sat = std::any_of(c.literals().begin(), c.literals().end(),
                                             [&](Literal l) { return l.var == x && satisfied(l); });
                if (!sat) next.push_back(idx);
            }
            children[b] = grow(next);
        }
        value_[x] = -1;
        return tree_.add_internal(x, children[0], children[1]);
    }

    const Cnf& h_;
    TreeBuildStats* stats_;
    std::vector<std::int8_t> value_;
    DecisionTree tree_;
};

std::string path_text(const std::vector<std::pair<Var, bool>>& path) {
    std::string out;
    for (const auto& [v, b] : path) {
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(v) + '=' + (b ? '1' : '0');
    }
    return out.empty() ? "(root)" : out;
}

}  // namespace

ParityQuery::ParityQuery(std::vector<Var> variables, bool b) : constant(b) {
    AffineEquation normal(std::move(variables), b);
    vars = std::move(normal.vars);
}

bool ParityQuery::value(std::span<const std::uint8_t> assignment) const noexcept {
    bool acc = constant;
    for (Var v : vars) acc ^= assignment[v - 1] != 0;
    return acc;
}

DecisionTree hitting_to_tree(const Cnf& h, TreeBuildStats* stats) {
    if (!is_hitting(h)) throw Error(kModule, "hitting_to_tree requires a hitting formula");
    if (!unsat_hitting_check(h)) throw Error(kModule, "hitting_to_tree requires an unsatisfiable hitting formula");
    return TreeBuilder(h, stats).build();
}

double log2_leaf_bound(Var num_vars, std::size_t num_clauses) {
    if (num_vars == 0 || num_clauses == 0) return 0.0;
    const double lm = std::log2(static_cast<double>(num_clauses));
    return 2.0 * lm * lm * std::log2(static_cast<double>(num_vars));
}

Verdict validate_tree(const DecisionTree& tree, const Cnf& axioms) {
    if (tree.empty()) return Verdict::reject(Reason::invalid_tree, "empty tree");
    std::vector<std::int8_t> value(axioms.num_vars() + 1, -1);
    std::vector<std::pair<Var, bool>> path;
    std::optional<Verdict> failure;

    auto walk = [&](auto&& self, NodeId id) -> void {
        if (failure) return;
        const auto& node = tree.node(id);
        if (node.leaf) {
            if (node.clause >= axioms.size()) {
                failure = Verdict::reject(Reason::invalid_tree,
                                          "leaf label " + std::to_string(node.clause + 1) + " out of range at " + path_text(path),
                                          {node.clause + 1});
                return;
            }
            for (Literal l : axioms[node.clause].literals()) {
                if (value[l.var] == -1 || l.satisfied_by(value[l.var] == 1)) {
                    failure = Verdict::reject(Reason::invalid_tree,
                                              "path " + path_text(path) + " does not falsify clause " +
                                                  std::to_string(node.clause + 1),
                                              {node.clause + 1});
                    return;
                }
            }
            return;
        }
        const Var x = node.query;
        if (x == 0 || x > axioms.num_vars()) {
            failure = Verdict::reject(Reason::invalid_tree, "query variable " + std::to_string(x) + " out of range");
            return;
        }
        if (value[x] != -1) {
            failure = Verdict::reject(Reason::invalid_tree, "variable " + std::to_string(x) + " repeats on path " + path_text(path));
            return;
        }
        for (int b = 0; b < 2; ++b) {
            value[x] = static_cast<std::int8_t>(b);
            path.emplace_back(x, b == 1);
            self(self, b == 0 ? node.child0 : node.child1);
            path.pop_back();
        }
        value[x] = -1;
    };
    walk(walk, tree.root());
    if (failure) return *failure;
    Verdict v = Verdict::accept();
    v.stat("leaves", tree.leaf_count());
    v.stat("depth", tree.depth());
    return v;
}

HittingCertificate tree_to_hitting(const DecisionTree& tree, const Cnf& axioms) {
    if (auto v = validate_tree(tree, axioms); !v) throw Error(kModule, "invalid tree: " + v.message);
    std::vector<Clause> clauses;
    std::vector<std::size_t> mapping;
    std::vector<Literal> negated_path;
    auto walk = [&](auto&& self, NodeId id) -> void {
        const auto& node = tree.node(id);
        if (node.leaf) {
            clauses.emplace_back(negated_path);
            mapping.push_back(node.clause);
            return;
        }
        // x = 0 is falsified by the positive literal, x = 1 by the negative one.
        negated_path.push_back({node.query, false});
        self(self, node.child0);
        negated_path.back().negative = true;
        self(self, node.child1);
        negated_path.pop_back();
    };
    walk(walk, tree.root());
    return {Cnf(axioms.num_vars(), std::move(clauses)), std::move(mapping)};
}

namespace {

struct ParityPathStep {
    ParityQuery query;
    bool answer;
};

// Equation asserted by a path step: ⊕ vars = answer ⊕ constant.
AffineEquation step_equation(const ParityPathStep& s) { return {s.query.vars, s.answer != s.query.constant}; }

}  // namespace

Verdict validate_tree(const ParityDecisionTree& tree, const Xcnf& axioms) {
    if (tree.empty()) return Verdict::reject(Reason::invalid_tree, "empty tree");
    const Var n = axioms.num_vars();
    std::vector<ParityPathStep> path;
    std::optional<Verdict> failure;

    auto path_system = [&] {
        AffineSystem sys(n);
        for (const auto& s : path) {
            auto eq = step_equation(s);
            sys.add_equation(eq.vars, eq.rhs);
        }
        return sys;
    };

    auto walk = [&](auto&& self, NodeId id) -> void {
        if (failure) return;
        const auto& node = tree.node(id);
        if (node.leaf) {
            if (node.clause >= axioms.size()) {
                failure = Verdict::reject(Reason::invalid_tree, "leaf label " + std::to_string(node.clause + 1) + " out of range",
                                          {node.clause + 1});
                return;
            }
            const Echelon e = echelonize(path_system());
            for (const auto& eq : axioms[node.clause].equations()) {
                if (!implies(e, e.basis.make_row(eq.vars, !eq.rhs))) {
                    failure = Verdict::reject(Reason::invalid_tree,
                                              "leaf path at depth " + std::to_string(path.size()) +
                                                  " does not falsify ⊕-clause " + std::to_string(node.clause + 1),
                                              {node.clause + 1});
                    return;
                }
            }
            return;
        }
        for (Var v : node.query.vars) {
            if (v == 0 || v > n) {
                failure = Verdict::reject(Reason::invalid_tree, "query variable " + std::to_string(v) + " out of range");
                return;
            }
        }
        AffineSystem coeffs(n);
        for (const auto& s : path) coeffs.add_equation(s.query.vars, false);
        const std::size_t before = echelonize(coeffs).rank;
        coeffs.add_equation(node.query.vars, false);
        if (echelonize(coeffs).rank == before) {
            failure = Verdict::reject(Reason::invalid_tree, "query at depth " + std::to_string(path.size()) +
                                                                " is linearly dependent on its path");
            return;
        }
        for (int b = 0; b < 2; ++b) {
            path.push_back({node.query, b == 1});
            self(self, b == 0 ? node.child0 : node.child1);
            path.pop_back();
        }
    };
    walk(walk, tree.root());
    if (failure) return *failure;
    Verdict v = Verdict::accept();
    v.stat("leaves", tree.leaf_count());
    v.stat("depth", tree.depth());
    return v;
}

XcnfCertificate parity_tree_to_hitting_xor(const ParityDecisionTree& tree, const Xcnf& axioms) {
    if (auto v = validate_tree(tree, axioms); !v) throw Error(kModule, "invalid parity tree: " + v.message);
    std::vector<XorClause> clauses;
    std::vector<std::size_t> mapping;
    std::vector<ParityPathStep> path;
    auto walk = [&](auto&& self, NodeId id) -> void {
        const auto& node = tree.node(id);
        if (node.leaf) {
            std::vector<AffineEquation> negated;
            for (const auto& s : path) negated.push_back(step_equation(s).negated());
            clauses.emplace_back(std::move(negated));
            mapping.push_back(node.clause);
            return;
        }
        for (int b = 0; b < 2; ++b) {
            path.push_back({node.query, b == 1});
            self(self, b == 0 ? node.child0 : node.child1);
            path.pop_back();
        }
    };
    walk(walk, tree.root());
    return {Xcnf(axioms.num_vars(), std::move(clauses)), std::move(mapping), StrengtheningMode::semantic};
}

ParityDecisionTree as_parity_tree(const DecisionTree& tree) {
    ParityDecisionTree out;
    if (tree.empty()) return out;
    auto copy = [&](auto&& self, NodeId id) -> NodeId {
        const auto& node = tree.node(id);
        if (node.leaf) return out.add_leaf(node.clause);
        const NodeId c0 = self(self, node.child0);
        const NodeId c1 = self(self, node.child1);
        return out.add_internal(ParityQuery({node.query}, false), c0, c1);
    };
    out.set_root(copy(copy, tree.root()));
    return out;
}

}  // namespace hitkit
