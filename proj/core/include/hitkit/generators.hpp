#pragma once

// Formula families used as verifier and simulation corpus. Every generator is
// deterministic given its parameters (and seed).
//
// Numbering conventions:
//   complete_hitting   clause k is falsified by the assignment with x_i = bit (i-1) of k
//   tseitin            variable = 1 + index of the edge in the sorted edge list
//   perfect_matching   edge (L_i, R_j) of K_{a,b} is variable (i-1)*b + j
//   lifted variants    z_e becomes x_{2e-1} ⊕ x_{2e}
//   compose            block i of an m-variable gadget uses variables (i-1)*m + 1 .. i*m
//   spread             c_1..c_{t-1} are variables 1..t-1, d_0..d_{t-1} are t..2t-1

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hitkit/formula.hpp"
#include "hitkit/random.hpp"
#include "hitkit/simulations.hpp"

namespace hitkit {

inline constexpr unsigned kMaxTseitinDegree = 30;

// Simple undirected graph on vertices 1..num_vertices. Edges are stored as
// (u, v) with u < v, sorted lexicographically.
class Graph {
public:
    Graph() = default;
    Graph(Var num_vertices, std::vector<std::pair<Var, Var>> edges);

    Var num_vertices() const noexcept { return num_vertices_; }
    std::span<const std::pair<Var, Var>> edges() const noexcept { return edges_; }
    unsigned degree(Var v) const;
    // Variables (edge indices + 1) of the edges at v, ascending.
    std::vector<Var> incident(Var v) const;

    static Graph triangle();
    static Graph cycle(Var n);
    static Graph complete(Var n);
    static Graph petersen();

private:
    Var num_vertices_ = 0;
    std::vector<std::pair<Var, Var>> edges_;
};

// `p graph V E` followed by one `u v` line per edge.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
// triangle, petersen, cycle:N, complete:N
Graph named_graph(std::string_view name);

Cnf complete_hitting(Var n);

// charges[v-1] is the charge of vertex v. An isolated vertex of charge 1
// contributes the empty clause.
Cnf tseitin(const Graph& g, std::span<const std::uint8_t> charges);

Cnf perfect_matching(Var a, Var b);
Xcnf perfect_matching_xor(Var a, Var b);
std::variant<Cnf, Xcnf> perfect_matching(Var a, Var b, bool xor_lift);

Cnf xorify(const Cnf& f);

// Leaf labels of the gadget tree are output bits (0 or 1).
struct Gadget {
    DecisionTree tree;
    Var num_vars = 0;

    static Gadget identity();
    static Gadget parity2();
};

// The two sides of an unsatisfiable hitting formula (clauses falsified where
// f = 0 and where f = 1). The composition is taken over their concatenation,
// zero side first.
struct UnambiguousPair {
    Cnf zero_side;
    Cnf one_side;
};

inline constexpr std::size_t kMaxComposedClauses = 1'000'000;

Cnf compose_unambiguous(const UnambiguousPair& pair, const Gadget& gadget);

Xcnf spread(unsigned t);

struct TreeHitting {
    DecisionTree tree;  // leaf labels index formula
    Cnf formula;
};

// Random total decision tree with at most max_leaves leaves; the formula
// lists the negated leaf paths in preorder.
TreeHitting random_tree_hitting(Var n, std::size_t max_leaves, std::uint64_t seed);

struct ParityTreeHitting {
    ParityDecisionTree tree;
    Xcnf formula;
};

// Random parity decision tree with independent queries on every path; the
// formula lists the negated leaf paths in preorder.
ParityTreeHitting random_parity_tree_hitting(Var n, std::size_t max_leaves, std::uint64_t seed);

// Concatenation of unsatisfiable hitting formulas over the largest universe.
Cnf union_hitting(std::span<const Cnf> parts);

// Seed from HITKIT_SEED (decimal or 0x-hex) if set, else kDefaultSeed.
std::uint64_t default_seed();

}  // namespace hitkit
