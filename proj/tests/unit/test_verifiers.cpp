#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "hitkit/codec.hpp"
#include "hitkit/error.hpp"
#include "hitkit/generators.hpp"
#include "hitkit/verifiers.hpp"
#include "selftest/corpus.hpp"

using namespace hitkit;

namespace {

Cnf cnf(Var n, std::initializer_list<std::initializer_list<long long>> clauses) {
    std::vector<Clause> out;
    for (auto c : clauses) out.push_back(Clause::from_dimacs(std::vector<long long>(c)));
    return Cnf(n, std::move(out));
}

Cnf concat(std::initializer_list<Cnf> parts) {
    Var n = 0;
    std::vector<Clause> out;
    for (const auto& p : parts) {
        n = std::max(n, p.num_vars());
        out.insert(out.end(), p.clauses().begin(), p.clauses().end());
    }
    return Cnf(n, std::move(out));
}

Cnf without(const Cnf& f, std::size_t drop) {
    std::vector<Clause> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) out.push_back(f[i]);
    return Cnf(f.num_vars(), std::move(out));
}

Xcnf without(const Xcnf& f, std::size_t drop) {
    std::vector<XorClause> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) out.push_back(f[i]);
    return Xcnf(f.num_vars(), std::move(out));
}

// Mix of hitting formulas, near misses and noise.
Cnf candidate(SplitMix64& rng) {
    const Var n = 2 + static_cast<Var>(rng.below(7));
    auto tree = [&] { return random_tree_hitting(n, 1 + rng.below(24), rng.next()).formula; };
    switch (rng.below(7)) {
        case 0: return tree();
        case 1: return concat({tree(), tree()});
        case 2: return concat({tree(), tree(), tree()});
        case 3: {
            const Cnf f = tree();
            return f.size() > 1 ? without(f, rng.below(f.size())) : f;
        }
        case 4: {
            const Cnf f = tree();
            std::vector<Clause> cs(f.clauses().begin(), f.clauses().end());
            auto& c = cs[rng.below(cs.size())];
            if (!c.empty()) {
                std::vector<Literal> lits(c.literals().begin(), c.literals().end());
                lits.erase(lits.begin() + static_cast<long>(rng.below(lits.size())));
                c = Clause(std::move(lits));
            }
            return Cnf(n, std::move(cs));
        }
        case 5: {
            const Cnf f = tree();
            std::vector<Clause> cs(f.clauses().begin(), f.clauses().end());
            cs.push_back(cs[rng.below(cs.size())]);
            return Cnf(n, std::move(cs));
        }
        default: return brute::random_cnf(rng, n, 1 + rng.below(8), n);
    }
}

bool brute_hitting(const Cnf& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (brute::intersect(f[i], f[j], f.num_vars())) return false;
    return true;
}

template <class Pred>
bool all_counts(const Cnf& f, Pred pred) {
    const auto counts = brute::falsified_counts(f);
    return std::all_of(counts.begin(), counts.end(), pred);
}

}  // namespace

TEST_SUITE("verifiers") {
    TEST_CASE("is_hitting examples") {
        CHECK(is_hitting(cnf(2, {{1, 2}, {-1, 2}, {-2}})).accepted);
        const Verdict v = is_hitting(cnf(2, {{1}, {2}}));
        CHECK_FALSE(v.accepted);
        CHECK(v.reason == Reason::not_hitting);
        CHECK(v.witness == std::vector<std::size_t>{1, 2});
        CHECK(is_hitting(Cnf(3, {})).accepted);
    }

    TEST_CASE("unsat_hitting_check examples") {
        CHECK(unsat_hitting_check(cnf(1, {{1}, {-1}})).accepted);
        const Verdict c2 = unsat_hitting_check(complete_hitting(2));
        CHECK(c2.accepted);
        CHECK(c2.stat_value("covered") == "4");
        const Cnf f = cnf(2, {{1, 2}, {-1, 2}, {-2}});
        CHECK(unsat_hitting_check(f).accepted);
        for (std::size_t i = 0; i < 3; ++i) CHECK(unsat_hitting_check(without(f, i)).reason == Reason::count_mismatch);
        CHECK_THROWS_AS(unsat_hitting_check(cnf(2, {{1}, {2}})), Error);
    }

    TEST_CASE("unsat_hitting_check is exact beyond 64 variables") {
        // x1, ¬x1 x2, ¬x1 ¬x2 x3, ..., all negative: a chain over 100 variables
        std::vector<Clause> cs;
        for (Var i = 1; i <= 100; ++i) {
            std::vector<Literal> lits;
            for (Var j = 1; j < i; ++j) lits.push_back({j, true});
            lits.push_back({i, false});
            cs.emplace_back(std::move(lits));
        }
        std::vector<Literal> last;
        for (Var j = 1; j <= 100; ++j) last.push_back({j, true});
        cs.emplace_back(last);
        const Cnf chain(100, cs);
        CHECK(unsat_hitting_check(chain).accepted);
        cs.pop_back();
        CHECK_FALSE(unsat_hitting_check(Cnf(100, cs)).accepted);
    }

    TEST_CASE("verify_hitting examples") {
        const Cnf f = cnf(2, {{1, 2}, {-1, 2}, {-2}});
        CHECK(verify_hitting(f, {f, std::vector<std::size_t>{0, 1, 2}}).accepted);
        CHECK(verify_hitting(cnf(1, {{1}, {-1}}), {complete_hitting(2), std::nullopt}).accepted);

        const Cnf axioms = cnf(2, {{1, 2}, {-2}});
        const Cnf cert = cnf(2, {{1, 2}, {-1, 2}, {-2}});  // ¬x1 ∨ x2 weakens nothing
        const Verdict v = verify_hitting(axioms, {cert, std::nullopt});
        CHECK(v.reason == Reason::no_strengthening);
        CHECK(v.witness == std::vector<std::size_t>{2});

        CHECK(verify_hitting(f, {f, std::vector<std::size_t>{0, 1}}).reason == Reason::mapping_length);
        CHECK(verify_hitting(f, {f, std::vector<std::size_t>{0, 1, 7}}).reason == Reason::mapping_out_of_range);
        CHECK(verify_hitting(f, {f, std::vector<std::size_t>{0, 2, 1}}).reason == Reason::no_strengthening);
    }

    TEST_CASE("hitting verifiers agree with the cube") {
        SplitMix64 rng(51);
        int accepted = 0;
        for (int i = 0; i < 400; ++i) {
            const Cnf f = candidate(rng);
            const bool hitting = brute_hitting(f);
            CHECK(is_hitting(f).accepted == hitting);
            if (hitting) CHECK(unsat_hitting_check(f).accepted == !brute::satisfiable(f));
            const Cnf axioms = candidate(rng);
            const bool valid = brute::partition(f) && selftest::cube_strengthenings(axioms, f, std::nullopt);
            CHECK(verify_hitting(axioms, {f, std::nullopt}).accepted == valid);
            CHECK(verify_hitting(f, {f, std::nullopt}).accepted == brute::partition(f));
            accepted += brute::partition(f);
        }
        CHECK(accepted > 50);
    }

    TEST_CASE("every tree-read formula is hitting and unsatisfiable") {
        SplitMix64 rng(52);
        for (int i = 0; i < 200; ++i) {
            const auto t = random_tree_hitting(1 + static_cast<Var>(rng.below(14)), 1 + rng.below(200), rng.next());
            CHECK(is_hitting(t.formula).accepted);
            CHECK(unsat_hitting_check(t.formula).accepted);
        }
    }

    TEST_CASE("hitting-k examples") {
        const Cnf pair = cnf(1, {{1}, {-1}});
        const Cnf twice = concat({pair, pair});
        CHECK(inclusion_exclusion_count(twice, 2, 1) == 2);
        CHECK(verify_hitting_k(pair, {twice, std::nullopt}, 2).accepted);
        CHECK(verify_hitting_k(pair, {twice, std::nullopt}, 1).reason == Reason::jointly_falsifiable);
        for (Var n = 1; n <= 5; ++n) CHECK(verify_hitting_k(complete_hitting(n), {complete_hitting(n), std::nullopt}, 1).accepted);

        SplitMix64 rng(53);
        const Var n = 4;
        const Cnf a = random_tree_hitting(n, 6, rng.next()).formula;
        const Cnf b = random_tree_hitting(n, 6, rng.next()).formula;
        const Cnf c = random_tree_hitting(n, 6, rng.next()).formula;
        const Cnf triple = concat({a, b, c});
        const Verdict v = verify_hitting_k(triple, {triple, std::nullopt}, 2);
        CHECK(v.reason == Reason::jointly_falsifiable);
        CHECK(v.witness.size() == 3);
        CHECK(verify_hitting_k(triple, {triple, std::nullopt}, 3).accepted);

        CHECK_THROWS_AS(verify_hitting_k(pair, {pair, std::nullopt}, 0), Error);
        CHECK_THROWS_AS(verify_hitting_k(pair, {pair, std::nullopt}, 5), Error);
    }

    TEST_CASE("hitting-k agrees with the cube") {
        SplitMix64 rng(54);
        for (int i = 0; i < 300; ++i) {
            const Cnf f = candidate(rng);
            const unsigned k = 1 + static_cast<unsigned>(rng.below(4));
            const bool valid = all_counts(f, [&](std::size_t c) { return c >= 1 && c <= k; });
            CHECK(verify_hitting_k(f, {f, std::nullopt}, k).accepted == valid);
            const auto counts = brute::falsified_counts(f);
            if (std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c <= k; })) {
                std::size_t covered = 0;
                for (auto c : counts) covered += c > 0;
                CHECK(inclusion_exclusion_count(f, k, f.num_vars()) == covered);
            }
        }
    }

    TEST_CASE("odd hitting examples") {
        const Cnf t = tseitin(Graph::triangle(), std::vector<std::uint8_t>{1, 0, 0});
        CHECK(is_odd_hitting(t).accepted);
        CHECK(verify_odd_hitting(t, {t, std::vector<std::size_t>{0, 1, 2, 3, 4, 5}}).accepted);
        for (std::size_t i = 0; i < t.size(); ++i) CHECK_FALSE(verify_odd_hitting(t, {without(t, i), std::nullopt}).accepted);

        SplitMix64 rng(55);
        for (int i = 0; i < 20; ++i) {
            const Cnf h = random_tree_hitting(5, 12, rng.next()).formula;
            CHECK(is_odd_hitting(h).accepted);
            CHECK(verify_odd_hitting(h, {h, std::nullopt}).accepted);
            const Cnf u = concat({h, random_tree_hitting(5, 12, rng.next()).formula});
            const Verdict v = is_odd_hitting(u);
            CHECK(v.reason == Reason::even_cover);
            CHECK(verify_odd_hitting(u, {u, std::nullopt}).reason == Reason::identity_fails);
        }
    }

    TEST_CASE("odd hitting agrees with the cube") {
        SplitMix64 rng(56);
        for (int i = 0; i < 300; ++i) {
            const Cnf f = candidate(rng);
            CHECK(is_odd_hitting(f).accepted == all_counts(f, [](std::size_t c) { return c == 0 || c % 2 == 1; }));
            CHECK(verify_odd_hitting(f, {f, std::nullopt}).accepted == all_counts(f, [](std::size_t c) { return c % 2 == 1; }));
        }
    }

    TEST_CASE("hitting-xor examples") {
        const Xcnf pair(1, {XorClause({AffineEquation({1}, true)}), XorClause({AffineEquation({1}, false)})});
        CHECK(is_hitting_xor(pair).accepted);
        CHECK(verify_hitting_xor(pair, {pair, std::nullopt, StrengtheningMode::syntactic}).accepted);

        const Xcnf s3 = spread(3);
        CHECK(s3.size() == 8);
        CHECK(s3.num_vars() == 5);
        CHECK(brute::partition(s3));
        CHECK(is_hitting_xor(s3).accepted);
        std::vector<std::size_t> identity(s3.size());
        for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
        CHECK(verify_hitting_xor(s3, {s3, identity, StrengtheningMode::syntactic}).accepted);

        std::vector<XorClause> dup(s3.clauses().begin(), s3.clauses().end());
        dup.push_back(dup[0]);
        const Verdict d = is_hitting_xor(Xcnf(5, dup));
        CHECK(d.reason == Reason::not_hitting);
        CHECK(d.witness == std::vector<std::size_t>{1, 9});

        const Verdict short_by_one = verify_hitting_xor(s3, {without(s3, 3), std::nullopt, StrengtheningMode::syntactic});
        CHECK(short_by_one.reason == Reason::count_mismatch);
    }

    TEST_CASE("semantic strengthening accepts rebased clauses that syntactic mode rejects") {
        SplitMix64 rng(57);
        int differ = 0;
        for (int i = 0; i < 40; ++i) {
            const auto t = random_parity_tree_hitting(3 + static_cast<Var>(rng.below(5)), 2 + rng.below(16), rng.next());
            const Xcnf axioms = selftest::rebased(t.formula);
            const XcnfCertificate syn{t.formula, std::nullopt, StrengtheningMode::syntactic};
            const XcnfCertificate sem{t.formula, std::nullopt, StrengtheningMode::semantic};
            CHECK(verify_hitting_xor(axioms, sem).accepted);
            const bool syntactic = verify_hitting_xor(axioms, syn).accepted;
            if (syntactic) CHECK(selftest::cube_strengthenings(axioms, t.formula, std::nullopt));
            differ += !syntactic;
        }
        CHECK(differ > 0);
    }

    TEST_CASE("hitting-xor agrees with the cube") {
        SplitMix64 rng(58);
        for (int i = 0; i < 300; ++i) {
            const Var n = 2 + static_cast<Var>(rng.below(6));
            Xcnf f;
            if (rng.coin()) {
                f = random_parity_tree_hitting(n, 1 + rng.below(12), rng.next()).formula;
                if (f.size() > 1 && rng.coin()) f = without(f, rng.below(f.size()));
            } else {
                std::vector<XorClause> cs;
                for (std::size_t j = 1 + rng.below(6); j > 0; --j) cs.push_back(brute::random_xor_clause(rng, n, 2));
                f = Xcnf(n, std::move(cs));
            }
            bool pairwise = true;
            for (std::size_t a = 0; a < f.size(); ++a)
                for (std::size_t b = a + 1; b < f.size(); ++b) pairwise = pairwise && !brute::intersect(f[a], f[b], n);
            CHECK(is_hitting_xor(f).accepted == pairwise);
            const Xcnf axioms = selftest::rebased(f);
            const bool valid = brute::partition(f);
            CHECK(verify_hitting_xor(axioms, {f, std::nullopt, StrengtheningMode::semantic}).accepted == valid);
        }
    }
}

TEST_SUITE("certificate-codec") {
    TEST_CASE("hitcert round trip with mapping") {
        const HittingCertificate c{cnf(2, {{1, 2}, {-1, 2}, {-2}}), std::vector<std::size_t>{2, 0, 1}};
        const std::string text = serialize_certificate(c);
        CHECK(text.find("map 3 1 2") != std::string::npos);
        const auto back = parse_hitting_certificate(text);
        CHECK(back.hitting == c.hitting);
        CHECK(back.mapping == c.mapping);
    }

    TEST_CASE("plain files are certificates with auto mapping") {
        const auto c = parse_hitting_certificate(serialize_cnf(complete_hitting(3)));
        CHECK(c.hitting == complete_hitting(3));
        CHECK_FALSE(c.mapping.has_value());
        const auto x = parse_xcnf_certificate(serialize_xcnf(spread(2)));
        CHECK(x.hitting == spread(2));
    }

    TEST_CASE("xor certificate round trip") {
        const XcnfCertificate c{spread(3), std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}, StrengtheningMode::syntactic};
        const auto back = parse_xcnf_certificate(serialize_certificate(c));
        CHECK(back.hitting == c.hitting);
        CHECK(back.mapping == c.mapping);
    }

    TEST_CASE("malformed certificates") {
        CHECK_THROWS_AS(parse_hitting_certificate(""), ParseError);
        CHECK_THROWS_AS(parse_hitting_certificate("p hitcert 1 2\n1 0\n-1 0\nmap 1\n"), ParseError);
        CHECK_THROWS_AS(parse_hitting_certificate("p hitcert 1 2\n1 0\n-1 0\nmap 0 1\n"), ParseError);
        CHECK_THROWS_AS(parse_hitting_certificate("p hitcert 1 2\n1 0\nmap 1 1\n-1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_hitting_certificate("p cnf 1 2\n1 0\n-1 0\nmap 1 1\n"), ParseError);
    }
}
