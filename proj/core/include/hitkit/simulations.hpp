#pragma once

// Conversions between hitting certificates and (parity) decision trees that
// solve the falsified-clause search problem.
//
// Tree text format, preorder s-expressions:
//   (v T0 T1)            query x_v, T0 taken when x_v = 0
//   (^ b v1 ... vk T0 T1) query b ⊕ x_v1 ⊕ ... ⊕ x_vk, T0 taken on value 0
//   [c]                  leaf naming axiom clause c (1-based)

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hitkit/formula.hpp"
#include "hitkit/verdict.hpp"
#include "hitkit/verifiers.hpp"

namespace hitkit {

using NodeId = std::uint32_t;

// Arena-allocated binary tree; children are added before their parent.
template <class Query>
class BasicDecisionTree {
public:
    struct Node {
        bool leaf = true;
        Query query{};
        NodeId child0 = 0;
        NodeId child1 = 0;
        std::size_t clause = 0;  // 0-based axiom index at leaves
    };

    NodeId add_leaf(std::size_t clause) {
        nodes_.push_back(Node{true, Query{}, 0, 0, clause});
        root_ = static_cast<NodeId>(nodes_.size() - 1);
        return root_;
    }
    NodeId add_internal(Query query, NodeId child0, NodeId child1) {
        nodes_.push_back(Node{false, std::move(query), child0, child1, 0});
        root_ = static_cast<NodeId>(nodes_.size() - 1);
        return root_;
    }

    // The most recently added node unless set explicitly.
    NodeId root() const noexcept { return root_; }
    void set_root(NodeId id) noexcept { root_ = id; }
    const Node& node(NodeId id) const { return nodes_[id]; }
    std::size_t size() const noexcept { return nodes_.size(); }
    bool empty() const noexcept { return nodes_.empty(); }

    std::size_t leaf_count() const { return empty() ? 0 : count_leaves(root_); }
    std::size_t depth() const { return empty() ? 0 : depth_of(root_); }

private:
    std::size_t count_leaves(NodeId id) const {
        const Node& n = nodes_[id];
        return n.leaf ? 1 : count_leaves(n.child0) + count_leaves(n.child1);
    }
    std::size_t depth_of(NodeId id) const {
        const Node& n = nodes_[id];
        return n.leaf ? 0 : 1 + std::max(depth_of(n.child0), depth_of(n.child1));
    }

    std::vector<Node> nodes_;
    NodeId root_ = 0;
};

// b ⊕ x_v1 ⊕ ... ⊕ x_vk; variables sorted, repeats cancelled.
struct ParityQuery {
    std::vector<Var> vars;
    bool constant = false;

    ParityQuery() = default;
    ParityQuery(std::vector<Var> variables, bool b);
    bool value(std::span<const std::uint8_t> assignment) const noexcept;
    friend bool operator==(const ParityQuery&, const ParityQuery&) = default;
};

using DecisionTree = BasicDecisionTree<Var>;
using ParityDecisionTree = BasicDecisionTree<ParityQuery>;

// One split of hitting_to_tree: clauses alive at the node, width of the
// chosen narrowest clause, and how many clauses the branch falsifying the
// chosen literal removes.
struct SplitRecord {
    std::size_t clauses;
    std::size_t width;
    std::size_t removed;
};

struct TreeBuildStats {
    std::vector<SplitRecord> splits;
};

// Decision tree for the search problem of an unsatisfiable hitting formula.
// At each node: if a restricted clause is empty, emit a leaf for the least
// such clause; otherwise take the narrowest clause (least index on ties),
// choose its literal whose complement occurs in the most live clauses (least
// variable on ties) and branch on that variable. Leaf labels index h.
// Throws hitkit::Error unless h is an unsatisfiable hitting formula.
DecisionTree hitting_to_tree(const Cnf& h, TreeBuildStats* stats = nullptr);

// log2 of n^(2 log2^2 m), the leaf bound for hitting_to_tree.
double log2_leaf_bound(Var num_vars, std::size_t num_clauses);

// Negated root-to-leaf paths (preorder, 0-branch first), mapped to leaf
// labels. Throws hitkit::Error if validate_tree rejects.
HittingCertificate tree_to_hitting(const DecisionTree& tree, const Cnf& axioms);

// Each leaf becomes the disjunction of the negated path answers; the
// certificate uses semantic strengthening. Throws hitkit::Error if
// validate_tree rejects.
XcnfCertificate parity_tree_to_hitting_xor(const ParityDecisionTree& tree, const Xcnf& axioms);

// Path invariants (no repeated variable / independent parity queries,
// variables in range) and leaf labels falsified by their path.
Verdict validate_tree(const DecisionTree& tree, const Cnf& axioms);
Verdict validate_tree(const ParityDecisionTree& tree, const Xcnf& axioms);

// A plain tree as a parity tree querying single variables.
ParityDecisionTree as_parity_tree(const DecisionTree& tree);

DecisionTree parse_tree(std::string_view text);
ParityDecisionTree parse_parity_tree(std::string_view text);
// Plain unless a `^` query occurs.
std::variant<DecisionTree, ParityDecisionTree> parse_any_tree(std::string_view text);
std::string serialize_tree(const DecisionTree& tree);
std::string serialize_tree(const ParityDecisionTree& tree);

}  // namespace hitkit
