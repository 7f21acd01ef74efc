#include <doctest.h>

#include "brute.hpp"
#include "selftest/corpus.hpp"
#include "hitkit/error.hpp"
#include "hitkit/generators.hpp"
#include "hitkit/pit.hpp"

using namespace hitkit;

namespace {

PseudomonomialSum sum_of(Var n, Field field, std::initializer_list<RawTerm> terms) {
    std::vector<RawTerm> raw(terms);
    return normalize(raw, n, field);
}

Cnf cl1(Var n, std::initializer_list<std::initializer_list<long long>> clauses) {
    std::vector<Clause> out;
    for (auto c : clauses) out.push_back(Clause::from_dimacs(std::vector<long long>(c)));
    return Cnf(n, std::move(out));
}

}  // namespace

TEST_SUITE("pit") {
    TEST_CASE("normalize collapses and drops") {
        const auto s = sum_of(1, Field::gf2(), {{1, {1, 1}}});
        REQUIRE(s.terms.size() == 1);
        REQUIRE(s.terms[0].factors.size() == 1);
        CHECK(s.terms[0].factors[0].kind == Factor::pos);
        CHECK(sum_of(1, Field::gf2(), {{1, {1, -1}}}).terms.empty());
        CHECK(sum_of(2, Field::gf2(), {{2, {1}}}).terms.empty());
        CHECK(sum_of(2, Field::prime(3), {{-1, {2}}}).terms[0].coefficient == 2);
        // like terms stay separate
        CHECK(sum_of(2, Field::gf2(), {{1, {1}}, {1, {1}}}).terms.size() == 2);
        CHECK_THROWS_AS(sum_of(2, Field::gf2(), {{1, {3}}}), Error);
    }

    TEST_CASE("normalize agrees with raw evaluation") {
        SplitMix64 rng(41);
        for (int i = 0; i < 100; ++i) {
            const Var n = 1 + static_cast<Var>(rng.below(10));
            const Field field = i % 2 ? Field::prime(5) : Field::gf2();
            std::vector<RawTerm> raw;
            for (std::size_t j = rng.below(8); j > 0; --j) {
                RawTerm t{static_cast<long long>(rng.below(11)) - 5, {}};
                for (std::size_t k = rng.below(6); k > 0; --k) {
                    const long long v = 1 + static_cast<long long>(rng.below(n));
                    t.factors.push_back(rng.coin() ? v : -v);
                }
                raw.push_back(t);
            }
            const auto s = normalize(raw, n, field);
            const std::uint32_t p = field.characteristic();
            brute::for_each_point(n, [&](const brute::Assignment& a) {
                long long acc = 0;
                for (const auto& t : raw) {
                    long long prod = t.coefficient;
                    for (long long f : t.factors) {
                        const bool x = a[static_cast<std::size_t>(std::llabs(f)) - 1] != 0;
                        prod *= f > 0 ? x : !x;
                    }
                    acc += prod;
                }
                const auto expected = static_cast<std::uint32_t>(((acc % p) + p) % p);
                CHECK(brute::evaluate(s, a) == expected);
            });
        }
    }

    TEST_CASE("small identities") {
        CHECK(pit_check(sum_of(1, Field::gf2(), {{1, {1}}, {1, {-1}}}), 1));
        CHECK_FALSE(pit_check(sum_of(1, Field::gf2(), {{1, {1}}}), 1));
        CHECK(pit_check(sum_of(2, Field::prime(3), {{1, {1}}, {2, {1}}}), 0));
        CHECK(pit_check(PseudomonomialSum{Field::gf2(), 3, {}}, 0));
        CHECK_FALSE(pit_check(PseudomonomialSum{Field::gf2(), 3, {}}, 1));
        // x1·x2 + x1·(1 - x2) + (1 - x1) = 1
        CHECK(pit_check(sum_of(2, Field::prime(7), {{1, {1, 2}}, {1, {1, -2}}, {1, {-1}}}), 1));
    }

    TEST_CASE("agrees with the cube for n <= 12 over GF(2), GF(3) and GF(5)") {
        SplitMix64 rng(42);
        int identities = 0;
        for (int i = 0; i < 600; ++i) {
            const Field field = i % 3 == 0 ? Field::gf2() : (i % 3 == 1 ? Field::prime(3) : Field::prime(5));
            const Var n = 1 + static_cast<Var>(rng.below(12));
            PseudomonomialSum s;
            std::uint32_t target = 0;
            if (i % 2) {
                const auto base = selftest::random_sum(rng, n, 1 + rng.below(40), field, 0.4);
                s = selftest::difference(base, selftest::equivalent_sum(rng, base, 80));
                if (rng.below(3) == 0) s.terms.push_back(selftest::random_sum(rng, n, 1, field, 0.3).terms[0]);
            } else {
                s = selftest::random_sum(rng, n, 1 + rng.below(60), field, 0.5);
                target = static_cast<std::uint32_t>(rng.below(field.characteristic()));
            }
            const bool expected = brute::identically(s, target);
            identities += expected;
            CHECK(pit_check(s, target) == expected);
        }
        CHECK(identities > 100);
    }

    TEST_CASE("sum of clauses of an unsatisfiable hitting formula is 1") {
        for (Var n = 1; n <= 8; ++n) {
            const Cnf h = complete_hitting(n);
            CHECK(pit_check(clauses_sum(h.clauses(), n), 1));
            CHECK(pit_check(clauses_sum(h.clauses(), n, Field::prime(3)), 1));
        }
    }

    TEST_CASE("layer sizes respect min(#terms, 2(previous + 1))") {
        SplitMix64 rng(43);
        for (int i = 0; i < 50; ++i) {
            const auto s = selftest::random_sum(rng, 16, 1 + rng.below(100), Field::gf2(), 0.5);
            const PitResult r = pit_check_detailed(s, 0);
            std::size_t prev = 0;
            for (std::size_t size : r.layer_sizes) {
                CHECK(size <= s.terms.size());
                CHECK(size <= 2 * (prev + 1));
                prev = size;
            }
        }
    }

    TEST_CASE("audit mode runs clean") {
        SplitMix64 rng(44);
        PitOptions audit;
        audit.audit = true;
        for (int i = 0; i < 40; ++i) {
            const Field field = i % 2 ? Field::prime(3) : Field::gf2();
            const auto s = selftest::random_sum(rng, 10, 1 + rng.below(50), field, 0.5);
            CHECK_NOTHROW(pit_check(s, 1, audit));
        }
    }

    TEST_CASE("merge_layer definitions reproduce the term products") {
        SplitMix64 rng(45);
        const Var n = 4;
        for (int round = 0; round < 30; ++round) {
            const Field field = round % 2 ? Field::prime(3) : Field::gf2();
            const std::uint32_t p = field.characteristic();
            const auto s = selftest::random_sum(rng, n, 10, field, 0.6);
            // truth tables over {0,1}^4 of the current layer (index 0 is the constant 1)
            std::vector<std::vector<std::uint32_t>> layer{std::vector<std::uint32_t>(16, 1)};
            LayerRows rows{1, {}};
            for (const auto& t : s.terms) rows.rows.push_back({t.coefficient});
            for (Var v = 1; v <= n; ++v) {
                std::vector<StepFactor> step;
                for (const auto& t : s.terms) {
                    StepFactor f = StepFactor::one;
                    for (const auto& pf : t.factors)
                        if (pf.var == v) f = pf.kind == Factor::pos ? StepFactor::pos : StepFactor::neg;
                    step.push_back(f);
                }
                const LayerMerge m = merge_layer(rows, step, v, field);
                CHECK(m.basis.size() <= std::min<std::size_t>(s.terms.size(), 2 * rows.width));
                std::vector<std::vector<std::uint32_t>> next{std::vector<std::uint32_t>(16, 1)};
                for (const auto& def : m.basis.definitions) {
                    std::vector<std::uint32_t> table(16, 0);
                    for (std::uint32_t a = 0; a < 16; ++a) {
                        const bool x = (a >> (v - 1)) & 1u;
                        std::uint64_t acc = 0;
                        for (std::size_t c = 0; c < rows.width; ++c) {
                            acc += std::uint64_t{def[c]} * layer[c][a];
                            if (x) acc += std::uint64_t{def[rows.width + c]} * layer[c][a];
                        }
                        table[a] = static_cast<std::uint32_t>(acc % p);
                    }
                    next.push_back(std::move(table));
                }
                layer = std::move(next);
                rows = m.rows;
                for (std::size_t j = 0; j < s.terms.size(); ++j) {
                    for (std::uint32_t a = 0; a < 16; ++a) {
                        std::uint64_t form = 0;
                        for (std::size_t c = 0; c < rows.width; ++c) form += std::uint64_t{rows.rows[j][c]} * layer[c][a];
                        std::uint32_t product = s.terms[j].coefficient;
                        for (const auto& pf : s.terms[j].factors) {
                            if (pf.var > v) continue;
                            const bool x = (a >> (pf.var - 1)) & 1u;
                            if ((pf.kind == Factor::pos) != x) product = 0;
                        }
                        CHECK(form % p == product);
                    }
                }
            }
        }
    }

    TEST_CASE("merge_layer single term collapses to one element") {
        LayerRows rows{1, {{1}}};
        const std::vector<StepFactor> pos{StepFactor::pos};
        auto m1 = merge_layer(rows, pos, 1, Field::gf2());
        CHECK(m1.basis.size() == 1);
        auto m2 = merge_layer(m1.rows, pos, 2, Field::gf2());
        CHECK(m2.basis.size() == 1);
        CHECK_THROWS_AS(merge_layer(rows, std::vector<StepFactor>{}, 1, Field::gf2()), Error);
    }

    TEST_CASE("field validation") {
        CHECK_THROWS_AS(Field::prime(4), Error);
        CHECK(Field::prime(2) == Field::gf2());
        CHECK_THROWS_AS(Field::prime(1), Error);
        CHECK_NOTHROW(Field::prime(2147483647u));
        const Field f = Field::prime(7);
        for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_SUITE("snsr") {
    TEST_CASE("trivial certificate") {
        const Cnf f = cl1(1, {{1}, {-1}});
        const SnsrProof proof{1, {{RawTerm{1, {}}}, {RawTerm{1, {}}}}};
        const Verdict v = verify_succinct_nsr(f, proof);
        CHECK(v.accepted);
        CHECK(v.stat_value("terms") == "2");
        CHECK(v.stat_value("field") == "2");
    }

    TEST_CASE("complete hitting formulas with unit multipliers") {
        for (Var n = 1; n <= 8; ++n) {
            const Cnf h = complete_hitting(n);
            const SnsrProof proof{n, std::vector<std::vector<RawTerm>>(h.size(), {RawTerm{1, {}}})};
            CHECK(verify_succinct_nsr(h, proof).accepted);
            CHECK(verify_succinct_nsr(h, proof, Field::prime(3)).accepted);
        }
    }

    TEST_CASE("sign mutations agree with the cube") {
        SplitMix64 rng(46);
        int rejected = 0;
        for (int i = 0; i < 100; ++i) {
            const Var n = 2 + static_cast<Var>(rng.below(6));
            const Cnf f = random_tree_hitting(n, 2 + rng.below(20), rng.next()).formula;
            SnsrProof proof{n, {}};
            for (std::size_t c = 0; c < f.size(); ++c) {
                // g = x_v + (1 - x_v) for a random v: still 1
                const long long v = 1 + static_cast<long long>(rng.below(n));
                proof.multipliers.push_back({RawTerm{1, {v}}, RawTerm{1, {-v}}});
            }
            CHECK(verify_succinct_nsr(f, proof).accepted);
            auto& g = proof.multipliers[rng.below(f.size())];
            auto& mono = g[rng.below(g.size())];
            mono.factors[0] = -mono.factors[0];
            const bool expected = brute::identically(selftest::expand_snsr(f, proof.multipliers, Field::gf2()), 1);
            const bool got = verify_succinct_nsr(f, proof).accepted;
            CHECK(got == expected);
            rejected += !got;
        }
        CHECK(rejected > 50);
    }

    TEST_CASE("errors") {
        const Cnf f = cl1(1, {{1}, {-1}});
        CHECK_THROWS_AS(verify_succinct_nsr(f, SnsrProof{1, {{}, {}}}), Error);
        CHECK_THROWS_AS(verify_succinct_nsr(f, SnsrProof{1, {{RawTerm{1, {2}}}, {}}}), Error);
    }

    TEST_CASE("codec") {
        const auto proof = parse_snsr("p snsr 2 2\n1 : 2\n1 -2 0\n* 3 0\nc note\n2 : 1\n0\n");
        REQUIRE(proof.multipliers.size() == 2);
        REQUIRE(proof.multipliers[0].size() == 2);
        CHECK(proof.multipliers[0][0].factors == std::vector<long long>{1, -2});
        CHECK(proof.multipliers[0][1].coefficient == 3);
        CHECK(proof.multipliers[0][1].factors.empty());
        CHECK(proof.multipliers[1].size() == 1);
        const std::string text = serialize_snsr(proof);
        CHECK(serialize_snsr(parse_snsr(text)) == text);
        CHECK_THROWS_AS(parse_snsr("p snsr 2 1\n1 : 1\n3 0\n"), ParseError);
        CHECK_THROWS_AS(parse_snsr("p snsr 2 1\n2 : 1\n1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_snsr("p snsr 2 1\n1 : 2\n1 0\n"), ParseError);
        CHECK_THROWS_AS(parse_snsr("p snsr 2 1\n1 : 1\n1\n"), ParseError);
        CHECK_THROWS_AS(parse_snsr("p snsr 2 1\n1 : 1\n1 0\n1 : 1\n1 0\n"), ParseError);
    }
}
