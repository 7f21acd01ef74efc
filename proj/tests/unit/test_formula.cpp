#include <doctest.h>

#include "brute.hpp"
#include "hitkit/codec.hpp"
#include "hitkit/error.hpp"
#include "hitkit/formula.hpp"
#include "hitkit/generators.hpp"

using namespace hitkit;

namespace {

Clause cl(std::initializer_list<long long> codes) {
    std::vector<long long> v(codes);
    return Clause::from_dimacs(v);
}

}  // namespace

TEST_SUITE("formula") {
    TEST_CASE("clauses are sorted sets without tautologies") {
        const Clause c = cl({3, -1, 3, 2});
        REQUIRE(c.width() == 3);
        CHECK(c.literals()[0] == Literal{1, true});
        CHECK(c.literals()[2] == Literal{3, false});
        CHECK_THROWS_AS(cl({1, -1}), Error);
        CHECK_THROWS_AS(Literal::from_dimacs(0), Error);
        CHECK(Clause{}.empty());
    }

    TEST_CASE("cnf rejects out-of-range variables") {
        CHECK_THROWS_AS(Cnf(2, {cl({3})}), Error);
        CHECK_NOTHROW(Cnf(3, {cl({3}), Clause{}}));
    }

    TEST_CASE("restrict") {
        const Cnf f(2, {cl({1, 2}), cl({-1})});
        PartialAssignment rho(2);
        rho.assign(1, false);
        const Cnf r = restrict(f, rho);
        REQUIRE(r.size() == 1);
        CHECK(r[0] == cl({2}));
        CHECK(r.num_vars() == 2);

        PartialAssignment rho1(2);
        rho1.assign(1, true);
        const Cnf r1 = restrict(f, rho1);
        REQUIRE(r1.size() == 1);
        CHECK(r1[0].empty());

        const Cnf g(1, {cl({-1})});
        PartialAssignment one(1);
        one.assign(1, true);
        const Cnf e = restrict(g, one);
        REQUIRE(e.size() == 1);
        CHECK(e[0].empty());
    }

    TEST_CASE("restrict keeps random tree formulas unsatisfiable and hitting") {
        SplitMix64 rng(11);
        for (int i = 0; i < 60; ++i) {
            const Var n = 2 + static_cast<Var>(rng.below(7));
            const Cnf h = random_tree_hitting(n, 1 + rng.below(40), rng.next()).formula;
            PartialAssignment rho(n);
            for (Var v = 1; v <= n; ++v)
                if (rng.below(3) == 0) rho.assign(v, rng.coin());
            const Cnf r = restrict(h, rho);
            CHECK_FALSE(brute::satisfiable(r));
            for (std::size_t a = 0; a < r.size(); ++a)
                for (std::size_t b = a + 1; b < r.size(); ++b) CHECK_FALSE(brute::intersect(r[a], r[b], n));
        }
    }

    TEST_CASE("clash") {
        CHECK(clash(cl({1, 2}), cl({-1, 2})) == Var{1});
        CHECK_FALSE(clash(cl({1}), cl({2})).has_value());
        CHECK(clash(cl({-1, 2, -3}), cl({1, 3})) == Var{1});
    }

    TEST_CASE("clash iff disjoint falsifying subcubes") {
        SplitMix64 rng(12);
        for (int i = 0; i < 300; ++i) {
            const Var n = 1 + static_cast<Var>(rng.below(10));
            const Cnf f = brute::random_cnf(rng, n, 2, 4);
            CHECK(clash(f[0], f[1]).has_value() == !brute::intersect(f[0], f[1], n));
        }
    }

    TEST_CASE("is_weakening") {
        CHECK(is_weakening(cl({1, -2, 3}), cl({1, 3})));
        CHECK_FALSE(is_weakening(cl({1}), cl({1, 2})));
        SplitMix64 rng(13);
        for (int i = 0; i < 300; ++i) {
            const Var n = 1 + static_cast<Var>(rng.below(10));
            const Cnf f = brute::random_cnf(rng, n, 2, 4);
            if (is_weakening(f[0], f[1])) CHECK(brute::subset(f[0], f[1], n));
            // for nonempty cubes the converse holds too
            CHECK(is_weakening(f[0], f[1]) == brute::subset(f[0], f[1], n));
        }
    }

    TEST_CASE("affine equations normalize") {
        const AffineEquation e({3, 1, 3, 2}, true);
        CHECK(e.vars == std::vector<Var>{1, 2});
        CHECK(AffineEquation({2, 2}, false).constant());
        CHECK(e.negated().rhs == false);
    }

    TEST_CASE("xor clauses reject tautologies and constants") {
        CHECK_THROWS_AS(XorClause({AffineEquation({1}, true), AffineEquation({1}, false)}), Error);
        CHECK_THROWS_AS(XorClause({AffineEquation({1, 1}, true)}), Error);
        const XorClause c({AffineEquation({1, 2}, true), AffineEquation({3}, false)});
        CHECK(c.size() == 2);
        CHECK(c.falsified_by(brute::point(0b100, 3)));
        CHECK_FALSE(c.falsified_by(brute::point(0b001, 3)));
    }

    TEST_CASE("xcnf from cnf has the same falsifying sets") {
        SplitMix64 rng(14);
        for (int i = 0; i < 100; ++i) {
            const Var n = 1 + static_cast<Var>(rng.below(10));
            const Cnf f = brute::random_cnf(rng, n, 4, 4);
            const Xcnf x = Xcnf::from_cnf(f);
            REQUIRE(x.size() == f.size());
            brute::for_each_point(n, [&](const brute::Assignment& a) {
                for (std::size_t c = 0; c < f.size(); ++c) CHECK(brute::clause_false(f[c], a) == brute::clause_false(x[c], a));
            });
        }
    }
}

TEST_SUITE("codec") {
    TEST_CASE("parse_cnf") {
        const Cnf f = parse_cnf("p cnf 2 2\n1 2 0\n-1 0\n");
        CHECK(f.num_vars() == 2);
        REQUIRE(f.size() == 2);
        CHECK(f[0] == Clause::from_dimacs(std::vector<long long>{1, 2}));
        CHECK(f[1] == Clause::from_dimacs(std::vector<long long>{-1}));
    }

    TEST_CASE("parse_cnf accepts comments, CRLF and clauses spanning lines") {
        const Cnf f = parse_cnf("c hello\r\np cnf 3 2\r\n1 -2\n3 0 -3\n0\n");
        REQUIRE(f.size() == 2);
        CHECK(f[0].width() == 3);
        CHECK(f[1] == Clause::from_dimacs(std::vector<long long>{-3}));
    }

    TEST_CASE("parse_cnf errors") {
        CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n1 -1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n2 0\n"), ParseError);
        CHECK_THROWS_AS(parse_cnf("p cnf 2 2\n1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_cnf("p cnf x 2\n"), ParseError);
        CHECK_THROWS_AS(parse_cnf("1 2 0\n"), ParseError);
        CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 2\n"), ParseError);
    }

    TEST_CASE("parse errors carry a line number") {
        try {
            parse_cnf("p cnf 2 2\n1 0\n1 -1 0\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }

    TEST_CASE("cnf round trip is a fixpoint") {
        SplitMix64 rng(21);
        for (int i = 0; i < 100; ++i) {
            const Var n = 1 + static_cast<Var>(rng.below(12));
            const Cnf f = brute::random_cnf(rng, n, rng.below(12), 5);
            const std::string text = serialize_cnf(f);
            const Cnf g = parse_cnf(text);
            CHECK(g == f);
            CHECK(serialize_cnf(g) == text);
        }
    }

    TEST_CASE("parse_xcnf") {
        const Xcnf x = parse_xcnf("p xcnf 3 1\n1 1 2 | 0 3 0\n");
        REQUIRE(x.size() == 1);
        const auto eqs = x[0].equations();
        REQUIRE(eqs.size() == 2);
        CHECK(eqs[0] == AffineEquation({1, 2}, true));
        CHECK(eqs[1] == AffineEquation({3}, false));
        CHECK_THROWS_AS(parse_xcnf("p xcnf 2 1\n1 1 | 0 1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_xcnf("p xcnf 2 1\n1 3 0\n"), ParseError);
        CHECK_THROWS_AS(parse_xcnf("p xcnf 2 1\n1 1 1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_xcnf("p xcnf 2 1\n1 1 | | 0 2 0\n"), ParseError);
    }

    TEST_CASE("xcnf shorthand literals") {
        const Xcnf x = parse_xcnf("p xcnf 2 1\n1 | -2 0\n");
        const auto eqs = x[0].equations();
        CHECK(eqs[0] == AffineEquation({1}, true));
        CHECK(eqs[1] == AffineEquation({2}, false));
    }

    TEST_CASE("cnf text read as xcnf keeps falsifying sets") {
        SplitMix64 rng(22);
        for (int i = 0; i < 50; ++i) {
            const Var n = 1 + static_cast<Var>(rng.below(10));
            const Cnf f = brute::random_cnf(rng, n, 1 + rng.below(5), 4);
            std::string text = "p xcnf " + std::to_string(n) + " " + std::to_string(f.size()) + "\n";
            for (const auto& c : f.clauses()) {
                std::string line;
                for (auto l : c.literals()) line += (line.empty() ? "" : " | ") + std::to_string(l.dimacs());
                text += line + (line.empty() ? "0\n" : " 0\n");
            }
            const Xcnf x = parse_xcnf(text);
            brute::for_each_point(n, [&](const brute::Assignment& a) {
                for (std::size_t c = 0; c < f.size(); ++c) CHECK(brute::clause_false(f[c], a) == brute::clause_false(x[c], a));
            });
        }
    }

    TEST_CASE("xcnf round trip") {
        SplitMix64 rng(23);
        for (int i = 0; i < 100; ++i) {
            const Var n = 1 + static_cast<Var>(rng.below(8));
            std::vector<XorClause> clauses;
            for (std::size_t c = rng.below(6); c > 0; --c) clauses.push_back(brute::random_xor_clause(rng, n, 3));
            const Xcnf x(n, std::move(clauses));
            const std::string text = serialize_xcnf(x);
            CHECK(parse_xcnf(text) == x);
            CHECK(serialize_xcnf(parse_xcnf(text)) == text);
        }
    }
}
