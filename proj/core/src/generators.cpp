#include "hitkit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <set>

#include "hitkit/error.hpp"
#include "hitkit/gf2.hpp"
#include "hitkit/gf2t.hpp"
#include "hitkit/verifiers.hpp"
#include "text_util.hpp"

namespace hitkit {

namespace {

constexpr const char* kModule = "generators";

// A hitting formula of width w has at most 2^w clauses.
void assert_width_to_size(const Cnf& h) {
    const std::size_t w = h.max_width();
    if (w < 63 && h.size() > (std::size_t{1} << w))
        throw Error(kModule, "internal: hitting formula of width " + std::to_string(w) + " has " +
                                 std::to_string(h.size()) + " clauses");
}

// Clause over vars falsified exactly by the pattern (bit i of pattern is
// the value of vars[i]).
Clause falsified_by_pattern(std::span<const Var> vars, std::uint64_t pattern) {
    std::vector<Literal> lits;
    lits.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) lits.push_back({vars[i], ((pattern >> i) & 1u) != 0});
    return Clause(std::move(lits));
}

}  // namespace

Graph::Graph(Var num_vertices, std::vector<std::pair<Var, Var>> edges) : num_vertices_(num_vertices) {
    for (auto& [u, v] : edges) {
        if (u == v) throw Error(kModule, "self-loop at vertex " + std::to_string(u));
        if (u == 0 || v == 0 || u > num_vertices || v > num_vertices)
            throw Error(kModule, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw Error(kModule, "multi-edge in graph");
    edges_ = std::move(edges);
}

unsigned Graph::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<Var> Graph::incident(Var v) const {
    std::vector<Var> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].first == v || edges_[e].second == v) out.push_back(static_cast<Var>(e + 1));
    return out;
}

Graph Graph::triangle() { return cycle(3); }

Graph Graph::cycle(Var n) {
    if (n < 3) throw Error(kModule, "cycle needs at least 3 vertices");
    std::vector<std::pair<Var, Var>> edges;
    for (Var i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return Graph(n, std::move(edges));
}

Graph Graph::complete(Var n) {
    if (n < 1) throw Error(kModule, "complete graph needs a vertex");
    std::vector<std::pair<Var, Var>> edges;
    for (Var i = 1; i <= n; ++i)
        for (Var j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph Graph::petersen() {
    std::vector<std::pair<Var, Var>> edges;
    for (Var i = 0; i < 5; ++i) {
        edges.emplace_back(i + 1, (i + 1) % 5 + 1);
        edges.emplace_back(i + 1, i + 6);
        edges.emplace_back(i + 6, (i + 2) % 5 + 6);
    }
    return Graph(10, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    constexpr const char* module = "graph-codec";
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(module, 1, "missing header");
    const auto header = detail::parse_header(module, lines[0], 2);
    if (header.kind != "graph") throw ParseError(module, lines[0].number, "expected 'p graph'");
    const auto num_vertices = header.fields[0];
    const auto num_edges = header.fields[1];
    if (num_vertices > 0xffffffffLL) throw ParseError(module, lines[0].number, "too many vertices");
    if (lines.size() - 1 != static_cast<std::size_t>(num_edges))
        throw ParseError(module, lines.back().number,
                         "header declares " + std::to_string(num_edges) + " edges, found " + std::to_string(lines.size() - 1));
    std::vector<std::pair<Var, Var>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto toks = detail::tokens(lines[i].text);
        if (toks.size() != 2) throw ParseError(module, lines[i].number, "expected 'u v'");
        const auto u = detail::expect_integer(module, lines[i].number, toks[0]);
        const auto v = detail::expect_integer(module, lines[i].number, toks[1]);
        if (u < 1 || v < 1 || u > num_vertices || v > num_vertices)
            throw ParseError(module, lines[i].number, "vertex out of range");
        edges.emplace_back(static_cast<Var>(u), static_cast<Var>(v));
    }
    try {
        return Graph(static_cast<Var>(num_vertices), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(module, lines[0].number, e.what());
    }
}

std::string serialize_graph(const Graph& g) {
    std::string out = "p graph " + std::to_string(g.num_vertices()) + ' ' + std::to_string(g.edges().size()) + '\n';
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

Graph named_graph(std::string_view name) {
    if (name == "triangle") return Graph::triangle();
    if (name == "petersen") return Graph::petersen();
    const auto colon = name.find(':');
    if (colon != std::string_view::npos) {
        const auto kind = name.substr(0, colon);
        const auto n = detail::to_integer(name.substr(colon + 1));
        if (n && *n >= 1 && *n <= 4096) {
            if (kind == "cycle") return Graph::cycle(static_cast<Var>(*n));
            if (kind == "complete") return Graph::complete(static_cast<Var>(*n));
        }
    }
    throw Error(kModule, "unknown graph '" + std::string(name) + "' (triangle, petersen, cycle:N, complete:N)");
}

Cnf complete_hitting(Var n) {
    if (n < 1 || n > 20) throw Error(kModule, "complete_hitting needs 1 <= n <= 20");
    std::vector<Var> vars(n);
    for (Var i = 0; i < n; ++i) vars[i] = i + 1;
    std::vector<Clause> clauses;
    clauses.reserve(std::size_t{1} << n);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) clauses.push_back(falsified_by_pattern(vars, a));
    Cnf out(n, std::move(clauses));
    assert_width_to_size(out);
    return out;
}

Cnf tseitin(const Graph& g, std::span<const std::uint8_t> charges) {
    if (charges.size() != g.num_vertices())
        throw Error(kModule, "expected " + std::to_string(g.num_vertices()) + " charges, got " + std::to_string(charges.size()));
    std::vector<Clause> clauses;
    for (Var v = 1; v <= g.num_vertices(); ++v) {
        const auto vars = g.incident(v);
        const unsigned deg = static_cast<unsigned>(vars.size());
        if (deg > kMaxTseitinDegree)
            throw Error(kModule, "vertex " + std::to_string(v) + " has degree " + std::to_string(deg) + " > " +
                                     std::to_string(kMaxTseitinDegree));
        const bool charge = charges[v - 1] != 0;
        // Patterns in lexicographic order: the first incident edge is the most significant bit.
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << deg); ++p) {
            std::vector<Literal> lits;
            bool parity = false;
            for (unsigned i = 0; i < deg; ++i) {
                const bool bit = ((p >> (deg - 1 - i)) & 1u) != 0;
                parity ^= bit;
                lits.push_back({vars[i], bit});
            }
            if (parity != charge) clauses.emplace_back(std::move(lits));
        }
    }
    return Cnf(static_cast<Var>(g.edges().size()), std::move(clauses));
}

namespace {

// Per vertex of K_{a,b}, the edge variables at it; left vertices first.
std::vector<std::vector<Var>> matching_stars(Var a, Var b) {
    if (a < 1 || b < 1 || std::uint64_t{a} * b > 2000) throw Error(kModule, "perfect_matching needs a, b >= 1 and a*b <= 2000");
    std::vector<std::vector<Var>> stars;
    for (Var i = 1; i <= a; ++i) {
        std::vector<Var> s;
        for (Var j = 1; j <= b; ++j) s.push_back((i - 1) * b + j);
        stars.push_back(std::move(s));
    }
    for (Var j = 1; j <= b; ++j) {
        std::vector<Var> s;
        for (Var i = 1; i <= a; ++i) s.push_back((i - 1) * b + j);
        stars.push_back(std::move(s));
    }
    return stars;
}

// Clauses as lists of (edge variable, literal is positive).
std::vector<std::vector<std::pair<Var, bool>>> matching_clauses(Var a, Var b) {
    std::vector<std::vector<std::pair<Var, bool>>> out;
    for (const auto& star : matching_stars(a, b)) {
        for (std::size_t x = 0; x < star.size(); ++x)
            for (std::size_t y = x + 1; y < star.size(); ++y) out.push_back({{star[x], false}, {star[y], false}});
        std::vector<std::pair<Var, bool>> cover;
        for (Var e : star) cover.emplace_back(e, true);
        out.push_back(std::move(cover));
    }
    return out;
}

}  // namespace

Cnf perfect_matching(Var a, Var b) {
    std::vector<Clause> clauses;
    for (const auto& c : matching_clauses(a, b)) {
        std::vector<Literal> lits;
        for (const auto& [v, pos] : c) lits.push_back({v, !pos});
        clauses.emplace_back(std::move(lits));
    }
    return Cnf(a * b, std::move(clauses));
}

Xcnf perfect_matching_xor(Var a, Var b) {
    std::vector<XorClause> clauses;
    for (const auto& c : matching_clauses(a, b)) {
        std::vector<AffineEquation> eqs;
        for (const auto& [v, pos] : c) eqs.emplace_back(std::vector<Var>{2 * v - 1, 2 * v}, pos);
        clauses.emplace_back(std::move(eqs));
    }
    return Xcnf(2 * a * b, std::move(clauses));
}

std::variant<Cnf, Xcnf> perfect_matching(Var a, Var b, bool xor_lift) {
    if (xor_lift) return perfect_matching_xor(a, b);
    return perfect_matching(a, b);
}

Cnf xorify(const Cnf& f) {
    if (f.max_width() > 20) throw Error(kModule, "xorify width guard: clause width exceeds 20");
    std::vector<Clause> clauses;
    for (const Clause& c : f.clauses()) {
        const std::size_t w = c.width();
        const auto lits = c.literals();
        // A literal on y_i is false when y_{i,0} ⊕ y_{i,1} equals its falsifying value.
        for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << w); ++choice) {
            std::vector<Literal> out;
            for (std::size_t k = 0; k < w; ++k) {
                const bool false_value = lits[k].negative;
                const bool first = ((choice >> (w - 1 - k)) & 1u) != 0;
                const bool second = first != false_value;
                out.push_back({2 * lits[k].var - 1, first});
                out.push_back({2 * lits[k].var, second});
            }
            clauses.emplace_back(std::move(out));
        }
    }
    Cnf out(2 * f.num_vars(), std::move(clauses));
    if (is_hitting(f)) assert_width_to_size(out);
    return out;
}

Gadget Gadget::identity() {
    Gadget g;
    const NodeId zero = g.tree.add_leaf(0);
    const NodeId one = g.tree.add_leaf(1);
    g.tree.add_internal(1, zero, one);
    g.num_vars = 1;
    return g;
}

Gadget Gadget::parity2() {
    Gadget g;
    const NodeId a0 = g.tree.add_leaf(0);
    const NodeId a1 = g.tree.add_leaf(1);
    const NodeId left = g.tree.add_internal(2, a0, a1);
    const NodeId b0 = g.tree.add_leaf(1);
    const NodeId b1 = g.tree.add_leaf(0);
    const NodeId right = g.tree.add_internal(2, b0, b1);
    g.tree.add_internal(1, left, right);
    g.num_vars = 2;
    return g;
}

Cnf compose_unambiguous(const UnambiguousPair& pair, const Gadget& gadget) {
    const Var n = std::max(pair.zero_side.num_vars(), pair.one_side.num_vars());
    std::vector<Clause> input(pair.zero_side.clauses().begin(), pair.zero_side.clauses().end());
    input.insert(input.end(), pair.one_side.clauses().begin(), pair.one_side.clauses().end());
    const Cnf h(n, std::move(input));
    if (!is_hitting(h) || !unsat_hitting_check(h))
        throw Error(kModule, "compose_unambiguous needs the two sides of an unsatisfiable hitting formula");

    const Var m = gadget.num_vars;
    if (gadget.tree.empty() || m == 0) throw Error(kModule, "empty gadget");
    if (std::uint64_t{n} * m > 0xffffffffull) throw Error(kModule, "composed variable count overflows");
    // Gadget paths per output bit: literals that falsify the negated path.
    std::vector<std::vector<Literal>> paths[2];
    std::vector<Literal> path;
    auto walk = [&](auto&& self, NodeId id) -> void {
        const auto& node = gadget.tree.node(id);
        if (node.leaf) {
            if (node.clause > 1) throw Error(kModule, "gadget leaf labels must be 0 or 1");
            paths[node.clause].push_back(path);
            return;
        }
        if (node.query == 0 || node.query > m) throw Error(kModule, "gadget query out of range");
        if (std::any_of(path.begin(), path.end(), [&](Literal l) { return l.var == node.query; }))
            throw Error(kModule, "gadget repeats a variable on a path");
        path.push_back({node.query, false});
        self(self, node.child0);
        path.back().negative = true;
        self(self, node.child1);
        path.pop_back();
    };
    walk(walk, gadget.tree.root());

    std::size_t total = 0;
    for (const Clause& c : h.clauses()) {
        std::size_t count = 1;
        for (Literal l : c.literals()) {
            const std::size_t options = paths[l.negative ? 1 : 0].size();
            if (options == 0) {
                count = 0;
                break;
            }
            if (count > kMaxComposedClauses / options) throw Error(kModule, "composition exceeds 10^6 clauses");
            count *= options;
        }
        total += count;
        if (total > kMaxComposedClauses) throw Error(kModule, "composition exceeds 10^6 clauses");
    }

    std::vector<Clause> out;
    out.reserve(total);
    for (const Clause& c : h.clauses()) {
        const auto lits = c.literals();
        // Literal y_i falsified means g(block i) equals the falsifying value.
        std::vector<const std::vector<std::vector<Literal>>*> options;
        for (Literal l : lits) options.push_back(&paths[l.negative ? 1 : 0]);
        if (std::any_of(options.begin(), options.end(), [](auto* o) { return o->empty(); })) continue;
        std::vector<std::size_t> idx(lits.size(), 0);
        while (true) {
            std::vector<Literal> clause;
            for (std::size_t k = 0; k < lits.size(); ++k) {
                const Var base = (lits[k].var - 1) * m;
                for (Literal g : (*options[k])[idx[k]]) clause.push_back({base + g.var, g.negative});
            }
            out.emplace_back(std::move(clause));
            bool done = true;
            for (std::size_t k = lits.size(); k-- > 0;) {
                if (++idx[k] < options[k]->size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if (done) break;
        }
    }
    Cnf composed(n * m, std::move(out));
    assert_width_to_size(composed);
    return composed;
}

Xcnf spread(unsigned t) {
    if (t < 2 || t > 16) throw Error(kModule, "spread needs 2 <= t <= 16");
    std::vector<XorClause> clauses;
    clauses.reserve(std::size_t{1} << t);
    std::vector<Gf2tElement> powers;
    for (unsigned i = 0; i < t; ++i) powers.push_back(Gf2tElement(t, std::uint32_t{1} << i));
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << t); ++a) {
        const Gf2tElement alpha(t, a);
        std::vector<Gf2tElement> products;
        for (unsigned i = 0; i < t; ++i) products.push_back(gf2t_mul(alpha, powers[i]));
        std::vector<AffineEquation> eqs;
        for (unsigned j = 0; j < t; ++j) {
            std::vector<Var> vars{static_cast<Var>(t + j)};
            for (unsigned i = 1; i < t; ++i)
                if (products[i].coeff(j)) vars.push_back(static_cast<Var>(i));
            // The clause is the disjunction of negated equations, so it is falsified exactly on V_alpha.
            eqs.push_back(AffineEquation(std::move(vars), alpha.coeff(j)).negated());
        }
        clauses.emplace_back(std::move(eqs));
    }
    return Xcnf(static_cast<Var>(2 * t - 1), std::move(clauses));
}

TreeHitting random_tree_hitting(Var n, std::size_t max_leaves, std::uint64_t seed) {
    if (n > 24) throw Error(kModule, "random_tree_hitting needs n <= 24");
    if (max_leaves < 1 || max_leaves > 4096) throw Error(kModule, "random_tree_hitting needs 1 <= max_leaves <= 4096");
    SplitMix64 rng(seed);
    TreeHitting out;
    std::vector<Clause> clauses;
    std::vector<Var> unused(n);
    for (Var i = 0; i < n; ++i) unused[i] = i + 1;
    std::vector<Literal> negated_path;

    auto grow = [&](auto&& self, std::size_t budget) -> NodeId {
        if (budget <= 1 || unused.empty()) {
            clauses.emplace_back(negated_path);
            return out.tree.add_leaf(clauses.size() - 1);
        }
        const std::size_t pick = rng.below(unused.size());
        const Var x = unused[pick];
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(pick));
        const std::size_t left = 1 + rng.below(budget - 1);
        negated_path.push_back({x, false});
        const NodeId c0 = self(self, left);
        negated_path.back().negative = true;
        const NodeId c1 = self(self, budget - left);
        negated_path.pop_back();
        unused.insert(unused.begin() + static_cast<std::ptrdiff_t>(pick), x);
        return out.tree.add_internal(x, c0, c1);
    };
    out.tree.set_root(grow(grow, max_leaves));
    out.formula = Cnf(n, std::move(clauses));
    assert_width_to_size(out.formula);
    return out;
}

ParityTreeHitting random_parity_tree_hitting(Var n, std::size_t max_leaves, std::uint64_t seed) {
    if (n < 1 || n > 24) throw Error(kModule, "random_parity_tree_hitting needs 1 <= n <= 24");
    if (max_leaves < 1 || max_leaves > 4096) throw Error(kModule, "random_parity_tree_hitting needs 1 <= max_leaves <= 4096");
    SplitMix64 rng(seed);
    ParityTreeHitting out;
    std::vector<XorClause> clauses;
    std::vector<std::pair<ParityQuery, bool>> path;

    auto fresh_query = [&]() -> ParityQuery {
        AffineSystem coeffs(n);
        for (const auto& [q, b] : path) coeffs.add_equation(q.vars, false);
        const std::size_t rank = echelonize(coeffs).rank;
        while (true) {
            std::vector<Var> vars;
            for (Var v = 1; v <= n; ++v)
                if (rng.coin()) vars.push_back(v);
            if (vars.empty()) continue;
            AffineSystem extended = coeffs;
            extended.add_equation(vars, false);
            if (echelonize(extended).rank > rank) return ParityQuery(std::move(vars), rng.coin());
        }
    };

    auto grow = [&](auto&& self, std::size_t budget) -> NodeId {
        if (budget <= 1 || path.size() == n) {
            std::vector<AffineEquation> negated;
            for (const auto& [q, b] : path) negated.push_back(AffineEquation(q.vars, b != q.constant).negated());
            clauses.emplace_back(std::move(negated));
            return out.tree.add_leaf(clauses.size() - 1);
        }
        ParityQuery q = fresh_query();
        const std::size_t left = 1 + rng.below(budget - 1);
        path.emplace_back(q, false);
        const NodeId c0 = self(self, left);
        path.back().second = true;
        const NodeId c1 = self(self, budget - left);
        path.pop_back();
        return out.tree.add_internal(std::move(q), c0, c1);
    };
    out.tree.set_root(grow(grow, max_leaves));
    out.formula = Xcnf(n, std::move(clauses));
    return out;
}

Cnf union_hitting(std::span<const Cnf> parts) {
    if (parts.empty()) throw Error(kModule, "union_hitting needs at least one part");
    Var n = 0;
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!is_hitting(parts[i]) || !unsat_hitting_check(parts[i]))
            throw Error(kModule, "part " + std::to_string(i + 1) + " is not an unsatisfiable hitting formula");
        n = std::max(n, parts[i].num_vars());
        clauses.insert(clauses.end(), parts[i].clauses().begin(), parts[i].clauses().end());
    }
    return Cnf(n, std::move(clauses));
}

std::uint64_t default_seed() {
    const char* env = std::getenv("HITKIT_SEED");
    if (!env || !*env) return kDefaultSeed;
    const std::string_view s(env);
    std::uint64_t value = 0;
    const bool hex = s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
    const auto body = hex ? s.substr(2) : s;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value, hex ? 16 : 10);
    if (ec != std::errc{} || ptr != body.data() + body.size()) throw Error(kModule, "HITKIT_SEED is not an integer");
    return value;
}

}  // namespace hitkit
