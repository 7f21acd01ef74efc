#include "acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

#include "corpus.hpp"
#include "hitkit/error.hpp"
#include "hitkit/generators.hpp"
#include "hitkit/gf2.hpp"
#include "hitkit/oracle.hpp"
#include "hitkit/pit.hpp"
#include "hitkit/simulations.hpp"
#include "hitkit/verifiers.hpp"

namespace hitkit::selftest {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures; keeps the first few messages.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (messages_.size() < 3) messages_.push_back(what);
    }
    bool ok() const { return failed_ == 0; }
    std::size_t failed() const { return failed_; }
    std::string summary(const std::string& note) const {
        std::string s = note + "; " + std::to_string(total_) + " checks, " + std::to_string(failed_) + " failed";
        for (const auto& m : messages_) s += "; " + m;
        return s;
    }

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> messages_;
};

std::vector<std::size_t> identity_map(std::size_t m) {
    std::vector<std::size_t> map(m);
    for (std::size_t i = 0; i < m; ++i) map[i] = i;
    return map;
}

Cnf without_clause(const Cnf& f, std::size_t drop) {
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) clauses.push_back(f[i]);
    return Cnf(f.num_vars(), std::move(clauses));
}

unsigned ceil_log2(std::size_t m) {
    unsigned b = 0;
    while ((std::size_t{1} << b) < m) ++b;
    return b;
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

// 1. unsat_hitting_check against the oracle's total-cover predicate.
std::string counting_identity(std::uint64_t seed, Checks& checks) {
    const auto corpus = tree_corpus(500, 1, 14, 256, seed);
    SplitMix64 rng(seed ^ 0x1111);
    std::size_t unsat = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Cnf h = corpus[i].formula;
        if (i % 2 == 1) h = without_clause(h, rng.below(h.size()));
        const bool verdict = static_cast<bool>(unsat_hitting_check(h));
        const bool oracle = coverage_profile(h).total_cover();
        unsat += oracle;
        checks.expect(verdict == oracle, "instance " + std::to_string(i) + " disagrees");
    }
    return "500 hitting formulas (" + std::to_string(unsat) + " unsat)";
}

// 2. hitting_to_tree leaf bound, search correctness and per-node decay.
std::string simulation_bound(std::uint64_t seed, Checks& checks) {
    const auto corpus = tree_corpus(200, 2, 12, 64, seed);
    std::size_t max_leaves = 0, splits = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Cnf& h = corpus[i].formula;
        TreeBuildStats stats;
        const DecisionTree tree = hitting_to_tree(h, &stats);
        const std::size_t leaves = tree.leaf_count();
        max_leaves = std::max(max_leaves, leaves);
        checks.expect(std::log2(static_cast<double>(leaves)) <= log2_leaf_bound(h.num_vars(), h.size()) + 1e-9,
                      "instance " + std::to_string(i) + " exceeds the leaf bound");
        checks.expect(check_tree_search(tree, h), "instance " + std::to_string(i) + " tree fails search");
        for (const SplitRecord& s : stats.splits) {
            ++splits;
            if (s.clauses < 2) continue;
            checks.expect(s.removed * ceil_log2(s.clauses) >= s.clauses - 1,
                          "instance " + std::to_string(i) + " split removes " + std::to_string(s.removed) + " of " +
                              std::to_string(s.clauses));
        }
    }
    return "200 instances, " + std::to_string(splits) + " splits, max leaves " + std::to_string(max_leaves);
}

// 3. tree_to_hitting(hitting_to_tree(h), h) is an accepted certificate.
std::string round_trip(std::uint64_t seed, Checks& checks) {
    const auto corpus = tree_corpus(200, 2, 12, 64, seed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Cnf& h = corpus[i].formula;
        const DecisionTree tree = hitting_to_tree(h);
        const HittingCertificate cert = tree_to_hitting(tree, h);
        const Verdict v = verify_hitting(h, cert);
        checks.expect(static_cast<bool>(v), "instance " + std::to_string(i) + ": " + v.message);
        checks.expect(cert.hitting.size() == tree.leaf_count(), "instance " + std::to_string(i) + " leaf/clause count");
    }
    return "200 round trips";
}

// 4. pit_check against cube evaluation, clause sums and the n = 64 timing.
std::string pit_correctness(std::uint64_t seed, Checks& checks) {
    SplitMix64 rng(seed);
    std::size_t identities = 0;
    for (std::size_t i = 0; i < 1000; ++i) {
        const Field field = i % 2 ? Field::prime(3) : Field::gf2();
        const Var n = 1 + static_cast<Var>(rng.below(12));
        PseudomonomialSum sum;
        std::uint32_t target = 0;
        switch ((i / 2) % 4) {
            case 0: {
                sum = random_sum(rng, n, 1 + rng.below(200), field, 0.3 + 0.1 * static_cast<double>(rng.below(6)));
                target = static_cast<std::uint32_t>(rng.below(field.characteristic()));
                break;
            }
            case 1: {
                const auto base = random_sum(rng, n, 1 + rng.below(90), field, 0.4);
                sum = difference(base, equivalent_sum(rng, base, 110));
                break;
            }
            case 2: {
                const auto base = random_sum(rng, n, 1 + rng.below(90), field, 0.4);
                sum = difference(base, equivalent_sum(rng, base, 109));
                sum.terms.push_back(random_sum(rng, n, 1, field, 0.5).terms.front());
                break;
            }
            default: {
                Cnf h = random_tree_hitting(n, 1 + rng.below(200), rng.next()).formula;
                if (rng.coin() && h.size() > 1) h = without_clause(h, rng.below(h.size()));
                sum = clauses_sum(h.clauses(), n, field);
                target = 1;
                break;
            }
        }
        const bool oracle = eval_sum_on_cube(sum, target);
        identities += oracle;
        checks.expect(pit_check(sum, target) == oracle, "sum " + std::to_string(i) + " disagrees with the cube");
    }

    for (const auto& inst : tree_corpus(200, 2, 12, 64, seed ^ 0x4444)) {
        checks.expect(pit_check(clauses_sum(inst.formula.clauses(), inst.formula.num_vars()), 1),
                      "clause sum of a corpus formula not identical to 1 over GF(2)");
        checks.expect(pit_check(clauses_sum(inst.formula.clauses(), inst.formula.num_vars(), Field::prime(3)), 1),
                      "clause sum of a corpus formula not identical to 1 over GF(3)");
    }

    PitOptions fast;
    fast.audit = false;
    const auto big = random_sum(rng, 64, 1000, Field::gf2(), 0.5);
    auto start = Clock::now();
    const PitResult r1 = pit_check_detailed(big, 1, fast);
    const double t1 = seconds_since(start);
    const auto half = random_sum(rng, 64, 400, Field::gf2(), 0.5);
    const auto twin = difference(half, equivalent_sum(rng, half, 600, true));
    start = Clock::now();
    const PitResult r2 = pit_check_detailed(twin, 0, fast);
    const double t2 = seconds_since(start);
    checks.expect(t1 < 5.0, "n=64, 1000 terms took " + std::to_string(t1) + " s");
    checks.expect(twin.terms.size() == 1000, "identity instance has " + std::to_string(twin.terms.size()) + " terms");
    checks.expect(r2.identical && t2 < 5.0, "n=64 identity instance: " + std::to_string(t2) + " s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "1000 sums (%zu identities); n=64 x 1000 terms %.2f s (max layer %zu), identity %.2f s",
                  identities, t1, r1.max_layer, t2);
    return buf;
}

// 5. Tseitin formulas are odd hitting; unions of two hitting formulas are not.
std::string odd_hitting(std::uint64_t seed, Checks& checks) {
    for (const char* name : {"triangle", "cycle:5", "complete:4", "petersen"}) {
        const Graph g = named_graph(name);
        std::vector<std::uint8_t> charges(g.num_vertices(), 0);
        charges[0] = 1;
        const Cnf f = tseitin(g, charges);
        const std::string tag(name);
        checks.expect(static_cast<bool>(is_odd_hitting(f)), tag + ": is_odd_hitting rejects");
        checks.expect(static_cast<bool>(verify_odd_hitting(f, {f, identity_map(f.size())})), tag + ": verify_odd_hitting rejects");
        const auto profile = coverage_profile(f);
        checks.expect(profile.all_odd() && profile.total_cover(), tag + ": oracle finds even coverage");
    }
    SplitMix64 rng(seed);
    for (int i = 0; i < 10; ++i) {
        const Var n = 2 + static_cast<Var>(rng.below(9));
        const Cnf parts[2] = {random_tree_hitting(n, 1 + rng.below(64), rng.next()).formula,
                              random_tree_hitting(n, 1 + rng.below(64), rng.next()).formula};
        const Cnf u = union_hitting(parts);
        checks.expect(!coverage_profile(u).all_odd(), "union: oracle finds odd coverage");
        checks.expect(!is_odd_hitting(u), "union accepted by is_odd_hitting");
        checks.expect(!verify_odd_hitting(u, {u, identity_map(u.size())}), "union accepted by verify_odd_hitting");
    }
    return "4 Tseitin graphs accepted, 10 unions rejected";
}

// 6. spread partitions, codimension-1 uniqueness and parity-tree certificates.
std::string hitting_xor(std::uint64_t seed, Checks& checks) {
    for (unsigned t = 2; t <= 6; ++t) {
        const Xcnf s = spread(t);
        checks.expect(static_cast<bool>(is_hitting_xor(s)), "spread(" + std::to_string(t) + ") rejected");
        if (t <= 5) checks.expect(coverage_profile(s).exactly_once(), "spread(" + std::to_string(t) + ") not a partition");
        if (t > 4) continue;
        const Var n = static_cast<Var>(2 * t - 1);
        std::vector<Echelon> spaces;
        for (const XorClause& c : s.clauses()) spaces.push_back(echelonize(c.falsifying_system(n)));
        for (std::uint64_t form = 1; form < (std::uint64_t{1} << n); ++form) {
            std::vector<Var> vars;
            for (Var v = 0; v < n; ++v)
                if ((form >> v) & 1u) vars.push_back(v + 1);
            for (int b = 0; b < 2; ++b) {
                std::size_t inside = 0;
                for (const Echelon& e : spaces) inside += implies(e, e.basis.make_row(vars, b == 1));
                checks.expect(inside <= 1, "spread(" + std::to_string(t) + "): " + std::to_string(inside) +
                                               " subspaces inside one level set");
            }
        }
    }
    SplitMix64 rng(seed);
    for (int i = 0; i < 100; ++i) {
        const Var n = 1 + static_cast<Var>(rng.below(10));
        const auto inst = random_parity_tree_hitting(n, 1 + rng.below(64), rng.next());
        const Xcnf axioms = rebased(inst.formula);
        const XcnfCertificate cert = parity_tree_to_hitting_xor(inst.tree, axioms);
        const Verdict v = verify_hitting_xor(axioms, cert);
        checks.expect(static_cast<bool>(v), "parity tree " + std::to_string(i) + ": " + v.message);
        checks.expect(check_tree_search(inst.tree, axioms), "parity tree " + std::to_string(i) + " fails search");
    }
    return "spread t=2..6, codim-1 for t<=4, 100 parity trees";
}

// 7. union_hitting as Hitting[k] certificates.
std::string hitting_k(std::uint64_t seed, Checks& checks) {
    SplitMix64 rng(seed);
    std::size_t instances = 0;
    for (unsigned k = 2; k <= 3; ++k) {
        for (int i = 0; i < 10; ++i) {
            const Var n = 2 + static_cast<Var>(rng.below(11));
            std::vector<Cnf> parts;
            for (unsigned p = 0; p < k; ++p) parts.push_back(random_tree_hitting(n, 1 + rng.below(48), rng.next()).formula);
            const Cnf u = union_hitting(parts);
            const HittingCertificate cert{u, identity_map(u.size())};
            const std::string tag = "k=" + std::to_string(k) + " instance " + std::to_string(i);
            checks.expect(static_cast<bool>(verify_hitting_k(u, cert, k)), tag + " rejected with k");
            checks.expect(!verify_hitting_k(u, cert, k - 1), tag + " accepted with k-1");
            const BigInt ie = inclusion_exclusion_count(u, k, n);
            checks.expect(ie == pow2(n), tag + " inclusion-exclusion total differs from 2^n");
            checks.expect(ie == BigInt(coverage_profile(u).covered()), tag + " inclusion-exclusion differs from the oracle");
            ++instances;
        }
    }
    return std::to_string(instances) + " unions for k in {2,3}";
}

// 8. Single-edit mutations never yield an accepted but oracle-invalid certificate.
struct MutationTally {
    std::size_t accepted = 0, rejected = 0, unsound = 0;
};

template <class Verify, class Valid>
void judge(MutationTally& tally, Verify&& verify, Valid&& valid) {
    bool accepted = false;
    try {
        accepted = verify();
    } catch (const Error&) {
        accepted = false;
    }
    if (!accepted) {
        ++tally.rejected;
        return;
    }
    ++tally.accepted;
    if (!valid()) ++tally.unsound;
}

std::optional<std::vector<std::size_t>> first_match_map(const Cnf& axioms, const Cnf& cert) {
    std::vector<std::size_t> map;
    for (const Clause& c : cert.clauses()) {
        std::size_t j = 0;
        while (j < axioms.size() && !is_weakening(c, axioms[j])) ++j;
        map.push_back(j);
    }
    return map;
}

void mutate_cnf_certificate(SplitMix64& rng, int kind, std::size_t axiom_count, HittingCertificate& cert) {
    std::vector<Clause> clauses(cert.hitting.clauses().begin(), cert.hitting.clauses().end());
    if (kind == 0) {
        std::vector<std::size_t> nonempty;
        for (std::size_t i = 0; i < clauses.size(); ++i)
            if (!clauses[i].empty()) nonempty.push_back(i);
        if (!nonempty.empty()) {
            const std::size_t c = nonempty[rng.below(nonempty.size())];
            std::vector<Literal> lits(clauses[c].literals().begin(), clauses[c].literals().end());
            Literal& l = lits[rng.below(lits.size())];
            l = ~l;
            clauses[c] = Clause(std::move(lits));
        }
    } else if (kind == 1 && !clauses.empty()) {
        const std::size_t c = rng.below(clauses.size());
        clauses.erase(clauses.begin() + static_cast<std::ptrdiff_t>(c));
        if (cert.mapping) cert.mapping->erase(cert.mapping->begin() + static_cast<std::ptrdiff_t>(c));
    } else if (cert.mapping && !cert.mapping->empty()) {
        (*cert.mapping)[rng.below(cert.mapping->size())] = rng.below(axiom_count + 1);
    }
    cert.hitting = Cnf(cert.hitting.num_vars(), std::move(clauses));
}

std::string mutation_robustness(std::uint64_t seed, Checks& checks) {
    SplitMix64 rng(seed);
    std::ostringstream note;
    auto report = [&](const char* name, const MutationTally& t) {
        checks.expect(t.unsound == 0, std::string(name) + ": " + std::to_string(t.unsound) + " oracle-invalid acceptances");
        checks.expect(t.accepted + t.rejected == 100, std::string(name) + ": mutation count");
        note << (note.tellp() > 0 ? "; " : "") << name << " " << t.rejected << "/100 rejected";
    };

    MutationTally hit;
    for (int i = 0; i < 100; ++i) {
        const Var n = 2 + static_cast<Var>(rng.below(7));
        const Cnf axioms = random_tree_hitting(n, 2 + rng.below(31), rng.next()).formula;
        HittingCertificate cert{axioms, identity_map(axioms.size())};
        if (i % 2) {
            const Cnf full = complete_hitting(n);
            cert = {full, first_match_map(axioms, full)};
            if (i % 4 == 3 && i % 3 != 2) cert.mapping.reset();
        }
        mutate_cnf_certificate(rng, i % 3, axioms.size(), cert);
        judge(hit, [&] { return static_cast<bool>(verify_hitting(axioms, cert)); }, [&] {
            return coverage_profile(cert.hitting).exactly_once() && cube_strengthenings(axioms, cert.hitting, cert.mapping);
        });
    }
    report("hitting", hit);

    MutationTally hitk;
    for (int i = 0; i < 100; ++i) {
        const Var n = 2 + static_cast<Var>(rng.below(7));
        const Cnf parts[2] = {random_tree_hitting(n, 2 + rng.below(24), rng.next()).formula,
                              random_tree_hitting(n, 2 + rng.below(24), rng.next()).formula};
        const Cnf axioms = union_hitting(parts);
        HittingCertificate cert{axioms, identity_map(axioms.size())};
        mutate_cnf_certificate(rng, i % 3, axioms.size(), cert);
        judge(hitk, [&] { return static_cast<bool>(verify_hitting_k(axioms, cert, 2)); }, [&] {
            const auto p = coverage_profile(cert.hitting);
            return p.total_cover() && p.max_at_most(2) && cube_strengthenings(axioms, cert.hitting, cert.mapping);
        });
    }
    report("hit-k", hitk);

    MutationTally odd;
    const char* graphs[] = {"triangle", "cycle:5", "complete:4", "cycle:6"};
    for (int i = 0; i < 100; ++i) {
        const Graph g = named_graph(graphs[i % 4]);
        std::vector<std::uint8_t> charges(g.num_vertices(), 0);
        charges[rng.below(charges.size())] = 1;
        const Cnf axioms = tseitin(g, charges);
        HittingCertificate cert{axioms, identity_map(axioms.size())};
        mutate_cnf_certificate(rng, (i / 4) % 3, axioms.size(), cert);
        judge(odd, [&] { return static_cast<bool>(verify_odd_hitting(axioms, cert)); }, [&] {
            const auto p = coverage_profile(cert.hitting);
            return p.total_cover() && p.all_odd() && cube_strengthenings(axioms, cert.hitting, cert.mapping);
        });
    }
    report("odd", odd);

    MutationTally xr;
    for (int i = 0; i < 100; ++i) {
        Xcnf axioms;
        XcnfCertificate cert;
        if (i % 2) {
            axioms = spread(2 + static_cast<unsigned>(rng.below(2)));
            cert = {axioms, identity_map(axioms.size()), StrengtheningMode::syntactic};
        } else {
            const auto inst = random_parity_tree_hitting(2 + static_cast<Var>(rng.below(6)), 2 + rng.below(24), rng.next());
            axioms = rebased(inst.formula);
            cert = parity_tree_to_hitting_xor(inst.tree, axioms);
        }
        const int kind = (i / 2) % 3;
        bool constructible = true;
        std::vector<XorClause> clauses(cert.hitting.clauses().begin(), cert.hitting.clauses().end());
        if (kind == 0) {
            std::vector<std::size_t> nonempty;
            for (std::size_t c = 0; c < clauses.size(); ++c)
                if (!clauses[c].empty()) nonempty.push_back(c);
            if (!nonempty.empty()) {
                const std::size_t c = nonempty[rng.below(nonempty.size())];
                std::vector<AffineEquation> eqs(clauses[c].equations().begin(), clauses[c].equations().end());
                auto& eq = eqs[rng.below(eqs.size())];
                eq = eq.negated();
                try {
                    clauses[c] = XorClause(std::move(eqs));
                } catch (const Error&) {
                    constructible = false;  // a tautological clause cannot be written down
                }
            }
        } else if (kind == 1 && !clauses.empty()) {
            const std::size_t c = rng.below(clauses.size());
            clauses.erase(clauses.begin() + static_cast<std::ptrdiff_t>(c));
            if (cert.mapping) cert.mapping->erase(cert.mapping->begin() + static_cast<std::ptrdiff_t>(c));
        } else if (cert.mapping && !cert.mapping->empty()) {
            (*cert.mapping)[rng.below(cert.mapping->size())] = rng.below(axioms.size() + 1);
        }
        cert.hitting = Xcnf(cert.hitting.num_vars(), std::move(clauses));
        judge(xr, [&] { return constructible && static_cast<bool>(verify_hitting_xor(axioms, cert)); }, [&] {
            return coverage_profile(cert.hitting).exactly_once() && cube_strengthenings(axioms, cert.hitting, cert.mapping);
        });
    }
    report("hitting-xor", xr);

    MutationTally nsr;
    for (int i = 0; i < 100; ++i) {
        const Var n = 2 + static_cast<Var>(rng.below(7));
        const Cnf f = random_tree_hitting(n, 2 + rng.below(31), rng.next()).formula;
        SnsrProof proof{n, std::vector<std::vector<RawTerm>>(f.size(), {RawTerm{1, {}}})};
        auto& g = proof.multipliers[rng.below(f.size())];
        const long long v = 1 + static_cast<long long>(rng.below(n));
        switch (i % 3) {
            case 0: g.front().factors.push_back(rng.coin() ? v : -v); break;
            case 1: g.clear(); break;
            default: g.push_back(RawTerm{1, {rng.coin() ? v : -v}}); break;
        }
        judge(nsr, [&] { return static_cast<bool>(verify_succinct_nsr(f, proof)); },
              [&] { return eval_sum_on_cube(expand_snsr(f, proof.multipliers, Field::gf2()), 1); });
    }
    report("snsr", nsr);
    return note.str();
}

// 9. Closed-form clause counts and small matching instances.
std::string generators(std::uint64_t, Checks& checks) {
    for (const char* name : {"triangle", "cycle:5", "complete:4", "complete:5", "petersen"}) {
        const Graph g = named_graph(name);
        std::uint64_t expected = 0;
        for (Var v = 1; v <= g.num_vertices(); ++v) expected += std::uint64_t{1} << (g.degree(v) - 1);
        for (Var c = 0; c < 2; ++c) {
            std::vector<std::uint8_t> charges(g.num_vertices(), 0);
            charges[0] = static_cast<std::uint8_t>(c);
            checks.expect(tseitin(g, charges).size() == expected, std::string(name) + ": Tseitin clause count");
        }
    }
    for (Var a = 1; a <= 4; ++a) {
        for (Var b = 1; b <= 4; ++b) {
            // a left vertices of degree b, b right vertices of degree a
            const std::uint64_t expected = a * (b * (b - 1) / 2 + 1) + b * (a * (a - 1) / 2 + 1);
            const std::string tag = "K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
            checks.expect(perfect_matching(a, b).size() == expected, tag + " clause count");
            checks.expect(perfect_matching_xor(a, b).size() == expected, tag + " lifted clause count");
        }
    }
    for (Var a = 1; a <= 3; ++a) {
        checks.expect(coverage_profile(perfect_matching(a, a + 2)).total_cover(), "K_{a,a+2} satisfiable");
        checks.expect(!coverage_profile(perfect_matching(a, a)).total_cover(), "K_{a,a} unsatisfiable");
    }
    return "Tseitin on 5 graphs, PM on K_{a,b} a,b<=4";
}

struct Spec {
    const char* title;
    double limit;
    std::string (*run)(std::uint64_t, Checks&);
};

const Spec kSpecs[kSuiteCriteria] = {
    {"counting identity", 30, counting_identity},
    {"simulation bound", 60, simulation_bound},
    {"round trip", 30, round_trip},
    {"PIT correctness", 60, pit_correctness},
    {"odd hitting", 60, odd_hitting},
    {"hitting(xor) and spread", 60, hitting_xor},
    {"hitting[k]", 30, hitting_k},
    {"mutation robustness", 60, mutation_robustness},
    {"generators", 10, generators},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kSuiteCriteria) throw Error("selftest", "no criterion " + std::to_string(id));
    const Spec& spec = kSpecs[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = spec.title;
    r.limit_seconds = spec.limit;
    Checks checks;
    const auto start = Clock::now();
    try {
        const std::string note = spec.run(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(id)), checks);
        r.detail = checks.summary(note);
        r.passed = checks.ok();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
        r.passed = false;
    }
    r.seconds = seconds_since(start);
    if (r.seconds >= r.limit_seconds) {
        r.passed = false;
        r.detail += "; over the time limit";
    }
    return r;
}

std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kSuiteCriteria; ++id) {
        out.push_back(run_criterion(id, seed));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "%s  [%d] %s: %.2f s (limit %.0f s): ", r.passed ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.seconds, r.limit_seconds);
    return head + r.detail;
}

}  // namespace hitkit::selftest
