#include "hitkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "hitkit/error.hpp"
#include "hitkit/parallel.hpp"

namespace hitkit {

namespace {

constexpr const char* kModule = "oracle";

void check_limit(Var n, Var limit) {
    const Var cap = std::min(limit, kOracleMaxVars);
    if (n > cap) throw Error(kModule, "formula has " + std::to_string(n) + " variables; enumeration limit is " + std::to_string(cap));
}

bool parity(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }

// A clause is falsified iff none of its units is true. A unit is a literal
// or an affine equation; flipping a variable toggles every unit containing it.
struct Unit {
    std::uint64_t mask;
    bool value_at_zero;  // truth at the all-zero assignment
};

struct UnitFormula {
    Var num_vars = 0;
    std::vector<std::vector<Unit>> clauses;
};

UnitFormula units_of(const Cnf& f) {
    UnitFormula u{f.num_vars(), {}};
    for (const Clause& c : f.clauses()) {
        std::vector<Unit> units;
        for (Literal l : c.literals()) units.push_back({std::uint64_t{1} << (l.var - 1), l.negative});
        u.clauses.push_back(std::move(units));
    }
    return u;
}

UnitFormula units_of(const Xcnf& f) {
    UnitFormula u{f.num_vars(), {}};
    for (const XorClause& c : f.clauses()) {
        std::vector<Unit> units;
        for (const auto& eq : c.equations()) {
            std::uint64_t mask = 0;
            for (Var v : eq.vars) mask |= std::uint64_t{1} << (v - 1);
            units.push_back({mask, !eq.rhs});
        }
        u.clauses.push_back(std::move(units));
    }
    return u;
}

struct Tally {
    std::vector<std::uint64_t> histogram;  // index = falsified count
    std::size_t min_count = SIZE_MAX, max_count = 0;
    std::uint64_t min_witness = UINT64_MAX, max_witness = UINT64_MAX;

    void record(std::size_t count, std::uint64_t mask) {
        if (count >= histogram.size()) histogram.resize(count + 1, 0);
        ++histogram[count];
        if (count < min_count || (count == min_count && mask < min_witness)) {
            min_count = count;
            min_witness = mask;
        }
        if (count > max_count || (count == max_count && mask < max_witness)) {
            max_count = count;
            max_witness = mask;
        }
    }

    void merge(const Tally& o) {
        if (o.histogram.size() > histogram.size()) histogram.resize(o.histogram.size(), 0);
        for (std::size_t i = 0; i < o.histogram.size(); ++i) histogram[i] += o.histogram[i];
        if (o.min_count < min_count || (o.min_count == min_count && o.min_witness < min_witness)) {
            min_count = o.min_count;
            min_witness = o.min_witness;
        }
        if (o.max_count > max_count || (o.max_count == max_count && o.max_witness < max_witness)) {
            max_count = o.max_count;
            max_witness = o.max_witness;
        }
    }
};

// Gray-code walk over the low `low_bits` variables with the high bits fixed.
Tally enumerate_chunk(const UnitFormula& f, const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& occurrences,
                      unsigned low_bits, std::uint64_t prefix) {
    Tally tally;
    const std::uint64_t base = prefix << low_bits;
    std::vector<std::vector<std::uint8_t>> truth(f.clauses.size());
    std::vector<std::size_t> true_units(f.clauses.size(), 0);
    std::size_t falsified = 0;
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        for (const Unit& u : f.clauses[c]) {
            const bool t = u.value_at_zero != parity(u.mask & base);
            truth[c].push_back(t);
            true_units[c] += t;
        }
        if (true_units[c] == 0) ++falsified;
    }
    tally.record(falsified, base);
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    std::uint64_t gray = 0;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(i));
        gray ^= std::uint64_t{1} << bit;
        for (const auto& [c, k] : occurrences[bit]) {
            const bool was = truth[c][k];
            truth[c][k] = !was;
            if (was) {
                if (--true_units[c] == 0) ++falsified;
            } else {
                if (true_units[c]++ == 0) --falsified;
            }
        }
        tally.record(falsified, base | gray);
    }
    return tally;
}

CoverageProfile profile(const UnitFormula& f, Var limit) {
    check_limit(f.num_vars, limit);
    const Var n = f.num_vars;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occurrences(n);
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (std::size_t k = 0; k < f.clauses[c].size(); ++k)
            for (Var v = 0; v < n; ++v)
                if ((f.clauses[c][k].mask >> v) & 1u) occurrences[v].emplace_back(c, k);

    const unsigned workers = worker_limit();
    const unsigned prefix_bits = (workers > 1 && n >= 12) ? 6u : 0u;
    const unsigned low_bits = n - prefix_bits;
    const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;

    Tally total;
    if (prefix_bits == 0) {
        total = enumerate_chunk(f, occurrences, low_bits, 0);
    } else {
        std::vector<Tally> partial(chunks);
        std::vector<std::thread> pool;
        const unsigned used = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
        for (unsigned w = 0; w < used; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t p = w; p < chunks; p += used) partial[p] = enumerate_chunk(f, occurrences, low_bits, p);
            });
        for (auto& t : pool) t.join();
        for (const auto& t : partial) total.merge(t);
    }

    CoverageProfile out;
    out.num_vars = n;
    for (std::size_t k = 0; k < total.histogram.size(); ++k)
        if (total.histogram[k]) out.histogram[k] = total.histogram[k];
    out.min_count = total.min_count;
    out.max_count = total.max_count;
    out.min_witness = total.min_witness;
    out.max_witness = total.max_witness;
    return out;
}

}  // namespace

bool CoverageProfile::all_odd() const noexcept {
    return std::all_of(histogram.begin(), histogram.end(), [](const auto& e) { return e.first % 2 == 1; });
}

std::uint64_t CoverageProfile::covered() const noexcept {
    std::uint64_t total = 0;
    for (const auto& [k, count] : histogram)
        if (k > 0) total += count;
    return total;
}

CoverageProfile coverage_profile(const Cnf& f, Var limit) {
    check_limit(f.num_vars(), limit);
    return profile(units_of(f), limit);
}

CoverageProfile coverage_profile(const Xcnf& f, Var limit) {
    check_limit(f.num_vars(), limit);
    return profile(units_of(f), limit);
}

std::vector<std::uint8_t> assignment_bits(std::uint64_t mask, Var num_vars) {
    std::vector<std::uint8_t> bits(num_vars);
    for (Var i = 0; i < num_vars; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    return bits;
}

bool eval_sum_on_cube(const PseudomonomialSum& sum, std::uint32_t target, Var limit) {
    check_limit(sum.num_vars, limit);
    const Field& field = sum.field;
    struct Term {
        std::uint64_t pos = 0, neg = 0;
        std::uint32_t coefficient;
    };
    std::vector<Term> terms;
    for (const auto& t : sum.terms) {
        Term m{0, 0, t.coefficient};
        for (const auto& f : t.factors) {
            if (f.var == 0 || f.var > sum.num_vars) throw Error(kModule, "term variable out of range");
            (f.kind == Factor::pos ? m.pos : m.neg) |= std::uint64_t{1} << (f.var - 1);
        }
        terms.push_back(m);
    }
    const std::uint32_t goal = field.reduce(target);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << sum.num_vars); ++a) {
        std::uint32_t value = 0;
        for (const Term& t : terms)
            if ((a & t.pos) == t.pos && (a & t.neg) == 0) value = field.add(value, t.coefficient);
        if (value != goal) return false;
    }
    return true;
}

std::optional<std::uint64_t> tree_search_counterexample(const DecisionTree& tree, const Cnf& f) {
    const Var n = f.num_vars();
    check_limit(n, kOracleMaxVars);
    if (tree.empty()) return 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;  // (positive vars, negative vars)
    for (const Clause& c : f.clauses()) {
        std::uint64_t p = 0, q = 0;
        for (Literal l : c.literals()) (l.negative ? q : p) |= std::uint64_t{1} << (l.var - 1);
        masks.emplace_back(p, q);
    }
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        NodeId id = tree.root();
        while (!tree.node(id).leaf) {
            const Var v = tree.node(id).query;
            if (v == 0 || v > n) return a;
            id = ((a >> (v - 1)) & 1u) ? tree.node(id).child1 : tree.node(id).child0;
        }
        const std::size_t c = tree.node(id).clause;
        if (c >= masks.size()) return a;
        if ((a & masks[c].first) != 0 || (a & masks[c].second) != masks[c].second) return a;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> tree_search_counterexample(const ParityDecisionTree& tree, const Xcnf& f) {
    const Var n = f.num_vars();
    check_limit(n, kOracleMaxVars);
    if (tree.empty()) return 0;
    auto mask_of = [](std::span<const Var> vars) {
        std::uint64_t m = 0;
        for (Var v : vars) m |= std::uint64_t{1} << (v - 1);
        return m;
    };
    std::vector<std::vector<std::pair<std::uint64_t, bool>>> clauses;
    for (const XorClause& c : f.clauses()) {
        std::vector<std::pair<std::uint64_t, bool>> eqs;
        for (const auto& eq : c.equations()) eqs.emplace_back(mask_of(eq.vars), eq.rhs);
        clauses.push_back(std::move(eqs));
    }
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        NodeId id = tree.root();
        while (!tree.node(id).leaf) {
            const ParityQuery& q = tree.node(id).query;
            if (q.vars.empty() || q.vars.front() == 0 || q.vars.back() > n) return a;
            const std::uint64_t m = mask_of(q.vars);
            id = (q.constant != parity(a & m)) ? tree.node(id).child1 : tree.node(id).child0;
        }
        const std::size_t c = tree.node(id).clause;
        if (c >= clauses.size()) return a;
        for (const auto& [m, rhs] : clauses[c])
            if (parity(a & m) == rhs) return a;
    }
    return std::nullopt;
}

}  // namespace hitkit
