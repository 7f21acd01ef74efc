#include "hitkit/verifiers.hpp"

#include <algorithm>
#include <string>

#include "hitkit/error.hpp"
#include "hitkit/gf2.hpp"
#include "hitkit/parallel.hpp"
#include "hitkit/pit.hpp"

namespace hitkit {

namespace {

constexpr const char* kModule = "verifiers";

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

std::string clause_text(const Clause& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.width(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c.literals()[i].dimacs());
    }
    return out + ")";
}

// Lexicographically least pair (i, j), i < j, with pred(i, j) false.
template <class Compatible>
std::optional<std::pair<std::size_t, std::size_t>> first_bad_pair(std::size_t m, Compatible ok) {
    std::vector<std::size_t> partner(m, m);
    auto row = parallel_find_first(m, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!ok(i, j)) {
                partner[i] = j;
                return true;
            }
        }
        return false;
    });
    if (!row) return std::nullopt;
    return std::pair{*row, partner[*row]};
}

Verdict count_check(const Cnf& h, Var n) {
    BigInt covered = 0;
    for (const auto& c : h.clauses()) covered += pow2(n - c.width());
    const BigInt cube = pow2(n);
    Verdict v = covered == cube ? Verdict::accept()
                                : Verdict::reject(Reason::count_mismatch, "Σ 2^(n-|H_i|) = " + covered.str() +
                                                                              " but 2^n = " + cube.str());
    v.stat("covered", covered.str());
    v.stat("cube", cube.str());
    return v;
}

// Strengthening check shared by the CNF verifiers. Returns a rejecting verdict
// or nullopt.
std::optional<Verdict> check_strengthenings(const Cnf& axioms, const HittingCertificate& cert) {
    const auto& h = cert.hitting;
    if (cert.mapping) {
        const auto& map = *cert.mapping;
        if (map.size() != h.size())
            return Verdict::reject(Reason::mapping_length, "mapping has " + std::to_string(map.size()) +
                                                               " entries for " + std::to_string(h.size()) + " clauses");
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (map[i] >= axioms.size())
                return Verdict::reject(Reason::mapping_out_of_range,
                                       "clause " + std::to_string(i + 1) + " maps to axiom " + std::to_string(map[i] + 1) +
                                           " of " + std::to_string(axioms.size()),
                                       {i + 1});
            if (!is_weakening(h[i], axioms[map[i]]))
                return Verdict::reject(Reason::no_strengthening,
                                       "clause " + std::to_string(i + 1) + " " + clause_text(h[i]) +
                                           " does not weaken axiom " + std::to_string(map[i] + 1),
                                       {i + 1});
        }
        return std::nullopt;
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        const bool found = std::any_of(axioms.clauses().begin(), axioms.clauses().end(),
                                       [&](const Clause& a) { return is_weakening(h[i], a); });
        if (!found)
            return Verdict::reject(Reason::no_strengthening,
                                   "clause " + std::to_string(i + 1) + " " + clause_text(h[i]) + " weakens no axiom",
                                   {i + 1});
    }
    return std::nullopt;
}

void add_shape_stats(Verdict& v, const Cnf& h) {
    v.stat("clauses", h.size());
    v.stat("vars", h.num_vars());
    v.stat("max_width", h.max_width());
}

}  // namespace

Verdict is_hitting(const Cnf& h) {
    auto bad = first_bad_pair(h.size(), [&](std::size_t i, std::size_t j) { return clash(h[i], h[j]).has_value(); });
    Verdict v = bad ? Verdict::reject(Reason::not_hitting,
                                      "clauses " + std::to_string(bad->first + 1) + " and " +
                                          std::to_string(bad->second + 1) + " do not clash",
                                      {bad->first + 1, bad->second + 1})
                    : Verdict::accept();
    add_shape_stats(v, h);
    return v;
}

Verdict unsat_hitting_check(const Cnf& h) {
    if (!is_hitting(h)) throw Error(kModule, "unsat_hitting_check requires a hitting formula");
    Verdict v = count_check(h, h.num_vars());
    add_shape_stats(v, h);
    return v;
}

Verdict verify_hitting(const Cnf& axioms, const HittingCertificate& cert) {
    const auto& h = cert.hitting;
    const Var n = std::max(axioms.num_vars(), h.num_vars());
    Verdict v = is_hitting(h);
    if (v) {
        v = count_check(h, n);
        if (v)
            if (auto bad = check_strengthenings(axioms, cert)) v = std::move(*bad);
    }
    add_shape_stats(v, h);
    return v;
}

namespace {

std::vector<Echelon> falsifying_echelons(const Xcnf& h, Var n) {
    std::vector<Echelon> out;
    out.reserve(h.size());
    for (const auto& c : h.clauses()) out.push_back(echelonize(c.falsifying_system(n)));
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_intersecting(const std::vector<Echelon>& systems) {
    return first_bad_pair(systems.size(),
                          [&](std::size_t i, std::size_t j) { return disjoint(systems[i].basis, systems[j].basis); });
}

bool contains_equations(const XorClause& weak, const XorClause& strong) {
    return std::includes(weak.equations().begin(), weak.equations().end(), strong.equations().begin(),
                         strong.equations().end());
}

bool semantically_weakens(const Echelon& weak_falsifying, const XorClause& strong, Var n) {
    AffineSystem probe(n);
    for (const auto& e : strong.equations())
        if (!implies(weak_falsifying, probe.make_row(e.vars, !e.rhs))) return false;
    return true;
}

}  // namespace

Verdict is_hitting_xor(const Xcnf& h) {
    const auto systems = falsifying_echelons(h, h.num_vars());
    for (std::size_t i = 0; i < systems.size(); ++i)
        if (!systems[i].consistent) throw Error(kModule, "⊕-clause " + std::to_string(i + 1) + " is a tautology");
    auto bad = first_intersecting(systems);
    Verdict v = bad ? Verdict::reject(Reason::not_hitting,
                                      "falsifying subspaces of ⊕-clauses " + std::to_string(bad->first + 1) + " and " +
                                          std::to_string(bad->second + 1) + " intersect",
                                      {bad->first + 1, bad->second + 1})
                    : Verdict::accept();
    v.stat("clauses", h.size());
    v.stat("vars", h.num_vars());
    return v;
}

Verdict verify_hitting_xor(const Xcnf& axioms, const XcnfCertificate& cert) {
    const auto& h = cert.hitting;
    const Var n = std::max(axioms.num_vars(), h.num_vars());
    const auto systems = falsifying_echelons(h, n);

    auto finish = [&](Verdict v) {
        v.stat("clauses", h.size());
        v.stat("vars", n);
        v.stat("mode", cert.mode == StrengtheningMode::syntactic ? "syntactic" : "semantic");
        return v;
    };

    if (auto bad = first_intersecting(systems))
        return finish(Verdict::reject(Reason::not_hitting,
                                      "falsifying subspaces of ⊕-clauses " + std::to_string(bad->first + 1) + " and " +
                                          std::to_string(bad->second + 1) + " intersect",
                                      {bad->first + 1, bad->second + 1}));

    BigInt covered = 0;
    for (const auto& s : systems) covered += pow2(n - s.rank);
    const BigInt cube = pow2(n);
    if (covered != cube) {
        Verdict v = Verdict::reject(Reason::count_mismatch,
                                    "Σ 2^(n-rank) = " + covered.str() + " but 2^n = " + cube.str());
        v.stat("covered", covered.str());
        v.stat("cube", cube.str());
        return finish(std::move(v));
    }

    auto weakens = [&](std::size_t i, const XorClause& axiom) {
        return cert.mode == StrengtheningMode::syntactic ? contains_equations(h[i], axiom)
                                                         : semantically_weakens(systems[i], axiom, n);
    };
    if (cert.mapping) {
        const auto& map = *cert.mapping;
        if (map.size() != h.size())
            return finish(Verdict::reject(Reason::mapping_length, "mapping has " + std::to_string(map.size()) +
                                                                      " entries for " + std::to_string(h.size()) +
                                                                      " clauses"));
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (map[i] >= axioms.size())
                return finish(Verdict::reject(Reason::mapping_out_of_range,
                                              "clause " + std::to_string(i + 1) + " maps to axiom " +
                                                  std::to_string(map[i] + 1) + " of " + std::to_string(axioms.size()),
                                              {i + 1}));
            if (!weakens(i, axioms[map[i]]))
                return finish(Verdict::reject(Reason::no_strengthening,
                                              "⊕-clause " + std::to_string(i + 1) + " does not weaken axiom " +
                                                  std::to_string(map[i] + 1),
                                              {i + 1}));
        }
    } else {
        for (std::size_t i = 0; i < h.size(); ++i) {
            bool found = false;
            for (const auto& a : axioms.clauses())
                if ((found = weakens(i, a))) break;
            if (!found)
                return finish(Verdict::reject(Reason::no_strengthening,
                                              "⊕-clause " + std::to_string(i + 1) + " weakens no axiom", {i + 1}));
        }
    }
    Verdict v = Verdict::accept();
    v.stat("covered", covered.str());
    v.stat("cube", cube.str());
    return finish(std::move(v));
}

namespace {

// Depth-first walk over clause sets whose literals are jointly consistent,
// in lexicographic order of index sequences, up to size k + 1.
class CompatibleSets {
public:
    CompatibleSets(const Cnf& h, unsigned k, Var n) : h_(h), k_(k), n_(n), value_(n + 1, -1), refs_(n + 1, 0) {}

    // Returns the first compatible (k+1)-set, if any; accumulates the
    // inclusion–exclusion sum over compatible sets of size <= k.
    std::optional<std::vector<std::size_t>> run(bool stop_at_violation) {
        stop_ = stop_at_violation;
        total_ = 0;
        violation_.reset();
        chosen_.clear();
        extend(0, 0);
        return violation_;
    }

    const BigInt& total() const { return total_; }

private:
    bool add(const Clause& c) {
        for (Literal l : c.literals()) {
            const int want = l.negative ? 1 : 0;  // falsifying value
            if (value_[l.var] != -1 && value_[l.var] != want) return false;
        }
        for (Literal l : c.literals()) {
            if (refs_[l.var]++ == 0) {
                value_[l.var] = l.negative ? 1 : 0;
                ++fixed_;
            }
        }
        return true;
    }

    void remove(const Clause& c) {
        for (Literal l : c.literals()) {
            if (--refs_[l.var] == 0) {
                value_[l.var] = -1;
                --fixed_;
            }
        }
    }

    bool extend(std::size_t from, std::size_t depth) {
        for (std::size_t j = from; j < h_.size(); ++j) {
            if (!add(h_[j])) continue;
            chosen_.push_back(j);
            if (depth + 1 == k_ + 1) {
                if (!violation_) {
                    violation_ = chosen_;
                    for (auto& idx : *violation_) ++idx;
                }
                if (stop_) {
                    chosen_.pop_back();
                    remove(h_[j]);
                    return true;
                }
            } else {
                const BigInt term = BigInt(1) << (n_ - fixed_);
                if ((depth + 1) % 2 == 1)
                    total_ += term;
                else
                    total_ -= term;
                if (extend(j + 1, depth + 1) && stop_) {
                    chosen_.pop_back();
                    remove(h_[j]);
                    return true;
                }
            }
            chosen_.pop_back();
            remove(h_[j]);
        }
        return false;
    }

    const Cnf& h_;
    unsigned k_;
    Var n_;
    std::vector<int> value_;
    std::vector<std::size_t> refs_;
    std::size_t fixed_ = 0;
    bool stop_ = true;
    BigInt total_;
    std::optional<std::vector<std::size_t>> violation_;
    std::vector<std::size_t> chosen_;
};

void check_k(unsigned k) {
    if (k < 1 || k > kMaxHittingK)
        throw Error(kModule, "k = " + std::to_string(k) + " outside the supported range 1.." + std::to_string(kMaxHittingK));
}

}  // namespace

BigInt inclusion_exclusion_count(const Cnf& h, unsigned k, Var num_vars) {
    check_k(k);
    if (num_vars < h.num_vars()) throw Error(kModule, "variable universe smaller than the formula's");
    CompatibleSets sets(h, k, num_vars);
    sets.run(false);
    return sets.total();
}

Verdict verify_hitting_k(const Cnf& axioms, const HittingCertificate& cert, unsigned k) {
    check_k(k);
    const auto& h = cert.hitting;
    const Var n = std::max(axioms.num_vars(), h.num_vars());
    CompatibleSets sets(h, k, n);
    Verdict v;
    if (auto bad = sets.run(true)) {
        std::string msg = std::to_string(k + 1) + " clauses share a falsifying assignment:";
        for (auto i : *bad) msg += ' ' + std::to_string(i);
        v = Verdict::reject(Reason::jointly_falsifiable, std::move(msg), *bad);
    } else {
        const BigInt cube = pow2(n);
        v = sets.total() == cube ? Verdict::accept()
                                 : Verdict::reject(Reason::count_mismatch, "inclusion–exclusion total " +
                                                                               sets.total().str() + " but 2^n = " + cube.str());
        v.stat("covered", sets.total().str());
        v.stat("cube", cube.str());
        if (v)
            if (auto bad_map = check_strengthenings(axioms, cert)) v = std::move(*bad_map);
    }
    v.stat("k", k);
    add_shape_stats(v, h);
    return v;
}

Verdict is_odd_hitting(const Cnf& h) {
    const Var n = h.num_vars();
    auto failing = parallel_find_first(h.size(), [&](std::size_t c) {
        const Clause& chosen = h[c];
        PseudomonomialSum rest;
        rest.num_vars = n;
        for (std::size_t d = 0; d < h.size(); ++d) {
            if (d == c || clash(chosen, h[d])) continue;
            Pseudomonomial term;
            for (Literal l : h[d].literals())
                if (!chosen.contains(l)) term.factors.push_back({l.var, l.negative ? Factor::pos : Factor::neg});
            rest.terms.push_back(std::move(term));
        }
        return !pit_check(rest, 0);
    });
    Verdict v = failing ? Verdict::reject(Reason::even_cover,
                                          "some assignment falsifying clause " + std::to_string(*failing + 1) +
                                              " falsifies an even number of clauses",
                                          {*failing + 1})
                        : Verdict::accept();
    add_shape_stats(v, h);
    return v;
}

Verdict verify_odd_hitting(const Cnf& axioms, const HittingCertificate& cert) {
    const auto& h = cert.hitting;
    const Var n = std::max(axioms.num_vars(), h.num_vars());
    const auto result = pit_check_detailed(clauses_sum(h.clauses(), n), 1);
    Verdict v = result.identical ? Verdict::accept()
                                 : Verdict::reject(Reason::identity_fails,
                                                   "Σ of clause pseudomonomials is not identically 1 over GF(2)");
    if (v)
        if (auto bad = check_strengthenings(axioms, cert)) v = std::move(*bad);
    v.stat("max_layer", result.max_layer);
    add_shape_stats(v, h);
    return v;
}

}  // namespace hitkit
