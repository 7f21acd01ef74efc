#include "corpus.hpp"

#include <algorithm>

#include "hitkit/error.hpp"
#include "hitkit/gf2.hpp"

namespace hitkit::selftest {

std::vector<TreeHitting> tree_corpus(std::size_t count, Var min_n, Var max_n, std::size_t max_leaves, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<TreeHitting> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Var n = min_n + static_cast<Var>(rng.below(max_n - min_n + 1));
        const std::size_t leaves = 1 + rng.below(max_leaves);
        out.push_back(random_tree_hitting(n, leaves, rng.next()));
    }
    return out;
}

PseudomonomialSum random_sum(SplitMix64& rng, Var n, std::size_t terms, Field field, double density) {
    PseudomonomialSum sum{field, n, {}};
    const auto threshold = static_cast<std::uint64_t>(density * 1'000'000.0);
    for (std::size_t j = 0; j < terms; ++j) {
        Pseudomonomial t;
        for (Var v = 1; v <= n; ++v)
            if (rng.below(1'000'000) < threshold) t.factors.push_back({v, rng.coin() ? Factor::pos : Factor::neg});
        t.coefficient = 1 + static_cast<std::uint32_t>(rng.below(field.characteristic() - 1));
        sum.terms.push_back(std::move(t));
    }
    return sum;
}

PseudomonomialSum equivalent_sum(SplitMix64& rng, const PseudomonomialSum& sum, std::size_t max_terms, bool fill) {
    PseudomonomialSum out = sum;
    const Field& field = sum.field;
    const std::size_t rounds = fill ? SIZE_MAX : 1 + rng.below(8);
    for (std::size_t r = 0; r < rounds && out.terms.size() + 1 <= max_terms; ++r) {
        const bool room_for_pair = out.terms.size() + 2 <= max_terms;
        if (out.terms.empty() || (room_for_pair && rng.coin())) {
            // c·P - c·P
            Pseudomonomial t;
            for (Var v = 1; v <= out.num_vars; ++v)
                if (rng.below(3) == 0) t.factors.push_back({v, rng.coin() ? Factor::pos : Factor::neg});
            t.coefficient = 1 + static_cast<std::uint32_t>(rng.below(field.characteristic() - 1));
            Pseudomonomial u = t;
            u.coefficient = field.neg(t.coefficient);
            out.terms.push_back(std::move(t));
            out.terms.push_back(std::move(u));
        } else {
            // c·P = c·P·x + c·P·(1 - x) for a variable absent from P
            const std::size_t j = rng.below(out.terms.size());
            std::vector<Var> free;
            for (Var v = 1; v <= out.num_vars; ++v)
                if (std::none_of(out.terms[j].factors.begin(), out.terms[j].factors.end(),
                                 [v](const PseudoFactor& f) { return f.var == v; }))
                    free.push_back(v);
            if (free.empty()) {
                if (!room_for_pair) break;
                continue;
            }
            const Var x = free[rng.below(free.size())];
            Pseudomonomial a = out.terms[j];
            Pseudomonomial b = out.terms[j];
            a.factors.push_back({x, Factor::pos});
            b.factors.push_back({x, Factor::neg});
            std::sort(a.factors.begin(), a.factors.end());
            std::sort(b.factors.begin(), b.factors.end());
            out.terms[j] = std::move(a);
            out.terms.push_back(std::move(b));
        }
    }
    for (std::size_t i = out.terms.size(); i > 1; --i) std::swap(out.terms[i - 1], out.terms[rng.below(i)]);
    return out;
}

PseudomonomialSum difference(const PseudomonomialSum& a, const PseudomonomialSum& b) {
    PseudomonomialSum out = a;
    out.num_vars = std::max(a.num_vars, b.num_vars);
    for (Pseudomonomial t : b.terms) {
        t.coefficient = a.field.neg(t.coefficient);
        out.terms.push_back(std::move(t));
    }
    return out;
}

namespace {

std::vector<std::uint8_t> bits_of(std::uint64_t mask, Var n) {
    std::vector<std::uint8_t> bits(n);
    for (Var i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    return bits;
}

template <class C>
bool contains_impl(const C& inner, const C& outer, Var n) {
    if (n > 24) throw Error("selftest", "cube enumeration limited to 24 variables");
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
        const auto bits = bits_of(a, n);
        if (inner.falsified_by(bits) && !outer.falsified_by(bits)) return false;
    }
    return true;
}

template <class F>
bool strengthenings_impl(const F& axioms, const F& cert, const std::optional<std::vector<std::size_t>>& mapping) {
    const Var n = std::max(axioms.num_vars(), cert.num_vars());
    if (mapping && mapping->size() != cert.size()) return false;
    for (std::size_t i = 0; i < cert.size(); ++i) {
        if (mapping) {
            const std::size_t j = (*mapping)[i];
            if (j >= axioms.size() || !contains_impl(cert[i], axioms[j], n)) return false;
        } else {
            bool found = false;
            for (std::size_t j = 0; j < axioms.size() && !found; ++j) found = contains_impl(cert[i], axioms[j], n);
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace

bool cube_contains(const Clause& inner, const Clause& outer, Var n) { return contains_impl(inner, outer, n); }
bool cube_contains(const XorClause& inner, const XorClause& outer, Var n) { return contains_impl(inner, outer, n); }

bool cube_strengthenings(const Cnf& axioms, const Cnf& cert, const std::optional<std::vector<std::size_t>>& mapping) {
    return strengthenings_impl(axioms, cert, mapping);
}

bool cube_strengthenings(const Xcnf& axioms, const Xcnf& cert, const std::optional<std::vector<std::size_t>>& mapping) {
    return strengthenings_impl(axioms, cert, mapping);
}

PseudomonomialSum expand_snsr(const Cnf& f, const std::vector<std::vector<RawTerm>>& multipliers, Field field) {
    std::vector<RawTerm> raw;
    for (std::size_t i = 0; i < multipliers.size() && i < f.size(); ++i) {
        std::vector<long long> indicator;
        for (Literal l : f[i].literals()) indicator.push_back(l.negative ? l.var : -static_cast<long long>(l.var));
        for (const RawTerm& g : multipliers[i]) {
            RawTerm t{g.coefficient, indicator};
            t.factors.insert(t.factors.end(), g.factors.begin(), g.factors.end());
            raw.push_back(std::move(t));
        }
    }
    return normalize(raw, f.num_vars(), field);
}

Xcnf rebased(const Xcnf& f) {
    std::vector<XorClause> clauses;
    for (const XorClause& c : f.clauses()) {
        const Echelon e = echelonize(c.falsifying_system(f.num_vars()));
        std::vector<BitVector> rows(e.basis.rows().begin(), e.basis.rows().end());
        for (std::size_t i = 1; i < rows.size(); ++i) rows[i] ^= rows[0];
        std::vector<AffineEquation> eqs;
        for (const BitVector& row : rows) {
            std::vector<Var> vars;
            for (std::size_t b = row.find_first(); b != BitVector::npos && b < f.num_vars(); b = row.find_next(b + 1))
                vars.push_back(static_cast<Var>(b + 1));
            eqs.push_back(AffineEquation(std::move(vars), row.get(f.num_vars())).negated());
        }
        clauses.emplace_back(std::move(eqs));
    }
    return Xcnf(f.num_vars(), std::move(clauses));
}

}  // namespace hitkit::selftest
