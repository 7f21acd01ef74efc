#include "hitkit/pit.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <utility>

#include "hitkit/error.hpp"
#include "hitkit/random.hpp"
#include "text_util.hpp"

namespace hitkit {

namespace {

constexpr const char* kModule = "pit";

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Row arithmetic for GF(2): bit-packed rows.
struct Gf2Ops {
    using Row = BitVector;

    Row make(std::size_t width) const { return BitVector(width); }
    std::uint32_t get(const Row& r, std::size_t i) const { return r.get(i) ? 1 : 0; }
    void set(Row& r, std::size_t i, std::uint32_t v) const { r.set(i, (v & 1u) != 0); }
    std::size_t next_nonzero(const Row& r, std::size_t from) const {
        const std::size_t c = r.find_next(from);
        return c == BitVector::npos ? r.size() : c;
    }
    void axpy(Row& dst, std::uint32_t c, const Row& src) const {
        if (c & 1u) dst ^= src;
    }
    void scale(Row&, std::uint32_t) const {}
    std::uint32_t inv(std::uint32_t a) const { return a; }
    std::uint32_t neg(std::uint32_t a) const { return a; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return a & b; }

    // row ⊗ (a + b·x) over the spanning family: first half u, second half u·x.
    Row expand(const Row& row, std::size_t width, StepFactor f) const {
        Row out(2 * width);
        if (f != StepFactor::pos) copy_into(out, row, 0);
        if (f != StepFactor::one) copy_into(out, row, width);
        return out;
    }

    static void copy_into(Row& dst, const Row& src, std::size_t offset) {
        auto d = dst.words();
        auto s = src.words();
        const std::size_t word = offset >> 6, shift = offset & 63;
        for (std::size_t i = 0; i < s.size(); ++i) {
            d[word + i] |= s[i] << shift;
            if (shift != 0 && word + i + 1 < d.size()) d[word + i + 1] |= s[i] >> (64 - shift);
        }
    }
};

// Row arithmetic for GF(p), p odd.
struct PrimeOps {
    using Row = std::vector<std::uint32_t>;
    Field field;

    Row make(std::size_t width) const { return Row(width, 0); }
    std::uint32_t get(const Row& r, std::size_t i) const { return r[i]; }
    void set(Row& r, std::size_t i, std::uint32_t v) const { r[i] = v; }
    std::size_t next_nonzero(const Row& r, std::size_t from) const {
        while (from < r.size() && r[from] == 0) ++from;
        return from;
    }
    void axpy(Row& dst, std::uint32_t c, const Row& src) const {
        if (c == 0) return;
        const std::uint64_t p = field.characteristic();
        for (std::size_t i = 0; i < dst.size(); ++i)
            if (src[i] != 0) dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{c} * src[i]) % p);
    }
    void scale(Row& r, std::uint32_t c) const {
        for (auto& x : r) x = field.mul(x, c);
    }
    std::uint32_t inv(std::uint32_t a) const { return field.inv(a); }
    std::uint32_t neg(std::uint32_t a) const { return field.neg(a); }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return field.add(a, b); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return field.mul(a, b); }

    Row expand(const Row& row, std::size_t width, StepFactor f) const {
        Row out(2 * width, 0);
        for (std::size_t c = 0; c < width; ++c) {
            switch (f) {
                case StepFactor::one: out[c] = row[c]; break;
                case StepFactor::pos: out[width + c] = row[c]; break;
                case StepFactor::neg:
                    out[c] = row[c];
                    out[width + c] = field.neg(row[c]);
                    break;
            }
        }
        return out;
    }
};

template <class Ops>
struct MergeOut {
    std::vector<typename Ops::Row> rows;  // width = basis size + 1
    std::vector<typename Ops::Row> definitions;
};

// One layer merge. Basis extraction keeps the pivot rows in reduced echelon
// form over columns 1..2w-1, so a term's coordinate on basis element k is its
// entry at pivot column k, and its constant is its entry at column 0.
template <class Ops>
MergeOut<Ops> merge_impl(const Ops& ops, const std::vector<typename Ops::Row>& rows, std::size_t width,
                         std::span<const StepFactor> factors) {
    using Row = typename Ops::Row;
    const std::size_t wide = 2 * width;

    std::vector<Row> expanded;
    expanded.reserve(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) expanded.push_back(ops.expand(rows[j], width, factors[j]));

    std::vector<Row> basis;
    std::vector<std::size_t> pivot_col;
    std::vector<int> pivot_of(wide, -1);
    for (const Row& term : expanded) {
        Row v = term;
        ops.set(v, 0, 0);
        for (std::size_t c = ops.next_nonzero(v, 1); c < wide; c = ops.next_nonzero(v, c + 1)) {
            if (pivot_of[c] >= 0) ops.axpy(v, ops.neg(ops.get(v, c)), basis[static_cast<std::size_t>(pivot_of[c])]);
        }
        const std::size_t lead = ops.next_nonzero(v, 1);
        if (lead >= wide) continue;
        ops.scale(v, ops.inv(ops.get(v, lead)));
        for (auto& b : basis) {
            const std::uint32_t e = ops.get(b, lead);
            if (e != 0) ops.axpy(b, ops.neg(e), v);
        }
        pivot_of[lead] = static_cast<int>(basis.size());
        pivot_col.push_back(lead);
        basis.push_back(std::move(v));
    }

    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_col[a] < pivot_col[b]; });

    MergeOut<Ops> out;
    out.definitions.reserve(basis.size());
    std::vector<std::size_t> pivots;
    for (std::size_t i : order) {
        pivots.push_back(pivot_col[i]);
        out.definitions.push_back(std::move(basis[i]));
    }
    out.rows.reserve(expanded.size());
    for (const Row& term : expanded) {
        Row r = ops.make(pivots.size() + 1);
        ops.set(r, 0, ops.get(term, 0));
        for (std::size_t k = 0; k < pivots.size(); ++k) ops.set(r, k + 1, ops.get(term, pivots[k]));
        out.rows.push_back(std::move(r));
    }
    return out;
}

StepFactor step_of(Factor f) { return f == Factor::pos ? StepFactor::pos : StepFactor::neg; }

// Evaluates every layer at random cube points and checks that the forms
// reproduce each term's prefix product.
template <class Ops>
class LayerAudit {
public:
    LayerAudit(const Ops& ops, const PseudomonomialSum& sum, unsigned points) : ops_(ops) {
        SplitMix64 rng(0x68697464'61756469ull);
        points_.resize(points);
        values_.assign(points, std::vector<std::uint32_t>{1});
        prefix_.resize(points);
        for (auto& pt : points_) {
            pt.resize(sum.num_vars);
            for (auto& b : pt) b = static_cast<std::uint8_t>(rng.next() & 1u);
        }
        for (auto& pre : prefix_) {
            pre.reserve(sum.terms.size());
            for (const auto& t : sum.terms) pre.push_back(t.coefficient);
        }
    }

    void check(Var v, std::span<const StepFactor> factors, std::size_t width,
               const std::vector<typename Ops::Row>& definitions, const std::vector<typename Ops::Row>& rows) {
        for (std::size_t p = 0; p < points_.size(); ++p) {
            const std::uint32_t x = points_[p][v - 1];
            std::vector<std::uint32_t> next{1};
            for (const auto& def : definitions) {
                std::uint32_t acc = 0;
                for (std::size_t c = 0; c < width; ++c) {
                    acc = ops_.add(acc, ops_.mul(ops_.get(def, c), values_[p][c]));
                    if (x) acc = ops_.add(acc, ops_.mul(ops_.get(def, width + c), values_[p][c]));
                }
                next.push_back(acc);
            }
            values_[p] = std::move(next);
            for (std::size_t j = 0; j < rows.size(); ++j) {
                std::uint32_t& pre = prefix_[p][j];
                if (factors[j] == StepFactor::pos && !x) pre = 0;
                if (factors[j] == StepFactor::neg && x) pre = 0;
                std::uint32_t form = 0;
                for (std::size_t c = 0; c < values_[p].size(); ++c)
                    form = ops_.add(form, ops_.mul(ops_.get(rows[j], c), values_[p][c]));
                if (form != pre)
                    throw Error(kModule, "layer audit failed at variable " + std::to_string(v) + ", term " +
                                             std::to_string(j + 1));
            }
        }
    }

private:
    const Ops& ops_;
    std::vector<std::vector<std::uint8_t>> points_;
    std::vector<std::vector<std::uint32_t>> values_;
    std::vector<std::vector<std::uint32_t>> prefix_;
};

template <class Ops>
PitResult fold(const Ops& ops, const PseudomonomialSum& sum, std::uint32_t target, const PitOptions& options) {
    using Row = typename Ops::Row;
    PitResult result;
    result.terms = sum.terms.size();

    std::vector<Row> rows;
    rows.reserve(sum.terms.size());
    for (const auto& t : sum.terms) {
        Row r = ops.make(1);
        ops.set(r, 0, t.coefficient);
        rows.push_back(std::move(r));
    }
    std::size_t width = 1;

    std::optional<LayerAudit<Ops>> audit;
    if (options.audit && !sum.terms.empty()) audit.emplace(ops, sum, options.audit_points);

    std::vector<std::size_t> cursor(sum.terms.size(), 0);
    std::vector<StepFactor> step(sum.terms.size());
    for (Var v = 1; v <= sum.num_vars; ++v) {
        bool touched = false;
        for (std::size_t j = 0; j < sum.terms.size(); ++j) {
            const auto& fs = sum.terms[j].factors;
            if (cursor[j] < fs.size() && fs[cursor[j]].var == v) {
                step[j] = step_of(fs[cursor[j]].kind);
                ++cursor[j];
                touched = true;
            } else {
                step[j] = StepFactor::one;
            }
        }
        if (touched) {
            auto merged = merge_impl(ops, rows, width, step);
            if (audit) audit->check(v, step, width, merged.definitions, merged.rows);
            rows = std::move(merged.rows);
            width = merged.definitions.size() + 1;
        }
        result.layer_sizes.push_back(width - 1);
        result.max_layer = std::max(result.max_layer, width - 1);
    }

    Row total = ops.make(width);
    for (const auto& r : rows) ops.axpy(total, 1, r);
    bool identical = ops.get(total, 0) == target;
    for (std::size_t c = 1; c < width && identical; ++c) identical = ops.get(total, c) == 0;
    result.identical = identical;
    return result;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw Error(kModule, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(p);
}

std::uint32_t Field::reduce(long long value) const noexcept {
    const long long p = p_;
    long long r = value % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw Error(kModule, "inverse of zero");
    std::uint64_t base = a % p_, e = p_ - 2, acc = 1;
    while (e) {
        if (e & 1u) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

PseudomonomialSum normalize(std::span<const RawTerm> raw_terms, Var num_vars, Field field) {
    PseudomonomialSum sum;
    sum.field = field;
    sum.num_vars = num_vars;
    for (const auto& raw : raw_terms) {
        const std::uint32_t coeff = field.reduce(raw.coefficient);
        if (coeff == 0) continue;
        Pseudomonomial term;
        term.coefficient = coeff;
        for (long long f : raw.factors) {
            const long long v = f < 0 ? -f : f;
            if (f == 0 || v > static_cast<long long>(num_vars))
                throw Error(kModule, "factor " + std::to_string(f) + " out of range (n = " + std::to_string(num_vars) + ")");
            term.factors.push_back({static_cast<Var>(v), f > 0 ? Factor::pos : Factor::neg});
        }
        std::sort(term.factors.begin(), term.factors.end());
        term.factors.erase(std::unique(term.factors.begin(), term.factors.end()), term.factors.end());
        bool zero = false;
        for (std::size_t i = 1; i < term.factors.size(); ++i)
            if (term.factors[i].var == term.factors[i - 1].var) zero = true;  // x·(1 - x)
        if (!zero) sum.terms.push_back(std::move(term));
    }
    return sum;
}

Pseudomonomial clause_pseudomonomial(const Clause& clause) {
    Pseudomonomial m;
    for (Literal l : clause.literals()) m.factors.push_back({l.var, l.negative ? Factor::pos : Factor::neg});
    return m;
}

PseudomonomialSum clauses_sum(std::span<const Clause> clauses, Var num_vars, Field field) {
    PseudomonomialSum sum;
    sum.field = field;
    sum.num_vars = num_vars;
    for (const auto& c : clauses) {
        if (c.max_var() > num_vars) throw Error(kModule, "clause variable out of range");
        sum.terms.push_back(clause_pseudomonomial(c));
    }
    return sum;
}

LayerMerge merge_layer(const LayerRows& current, std::span<const StepFactor> next, Var next_var, const Field& field) {
    if (next.size() != current.rows.size()) throw Error(kModule, "merge_layer: one factor per term required");
    for (const auto& r : current.rows)
        if (r.size() != current.width) throw Error(kModule, "merge_layer: row width mismatch");

    LayerMerge out;
    out.basis.variable = next_var;
    out.basis.previous_width = current.width;
    auto finish = [&](const auto& ops, const auto& merged) {
        const std::size_t w = merged.definitions.size() + 1;
        out.rows.width = w;
        for (const auto& r : merged.rows) {
            std::vector<std::uint32_t> dense(w);
            for (std::size_t c = 0; c < w; ++c) dense[c] = ops.get(r, c);
            out.rows.rows.push_back(std::move(dense));
        }
        for (const auto& d : merged.definitions) {
            std::vector<std::uint32_t> dense(2 * current.width);
            for (std::size_t c = 0; c < dense.size(); ++c) dense[c] = ops.get(d, c);
            out.basis.definitions.push_back(std::move(dense));
        }
    };
    if (field.is_gf2()) {
        Gf2Ops ops;
        std::vector<BitVector> rows;
        for (const auto& r : current.rows) {
            BitVector b(current.width);
            for (std::size_t c = 0; c < r.size(); ++c) b.set(c, (r[c] & 1u) != 0);
            rows.push_back(std::move(b));
        }
        finish(ops, merge_impl(ops, rows, current.width, next));
    } else {
        PrimeOps ops{field};
        std::vector<std::vector<std::uint32_t>> rows;
        for (const auto& r : current.rows) {
            std::vector<std::uint32_t> reduced(r.size());
            for (std::size_t c = 0; c < r.size(); ++c) reduced[c] = r[c] % field.characteristic();
            rows.push_back(std::move(reduced));
        }
        finish(ops, merge_impl(ops, rows, current.width, next));
    }
    return out;
}

PitResult pit_check_detailed(const PseudomonomialSum& sum, std::uint32_t target, const PitOptions& options) {
    target %= sum.field.characteristic();
    for (const auto& t : sum.terms) {
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            if (t.factors[i].var == 0 || t.factors[i].var > sum.num_vars || (i > 0 && t.factors[i - 1].var >= t.factors[i].var))
                throw Error(kModule, "sum is not normalized");
        }
    }
    if (sum.field.is_gf2()) return fold(Gf2Ops{}, sum, target, options);
    return fold(PrimeOps{sum.field}, sum, target, options);
}

bool pit_check(const PseudomonomialSum& sum, std::uint32_t target, const PitOptions& options) {
    return pit_check_detailed(sum, target, options).identical;
}

Verdict verify_succinct_nsr(const Cnf& formula, const SnsrProof& proof, Field field) {
    if (proof.multipliers.size() > formula.size())
        throw Error(kModule, "proof has multipliers for " + std::to_string(proof.multipliers.size()) +
                                 " clauses, formula has " + std::to_string(formula.size()));
    const bool empty = std::all_of(proof.multipliers.begin(), proof.multipliers.end(),
                                   [](const auto& g) { return g.empty(); });
    if (empty) throw Error(kModule, "empty proof");

    std::vector<RawTerm> raw;
    for (std::size_t i = 0; i < proof.multipliers.size(); ++i) {
        std::vector<long long> clause_factors;
        for (Literal l : formula[i].literals())
            clause_factors.push_back(l.negative ? static_cast<long long>(l.var) : -static_cast<long long>(l.var));
        for (const auto& mono : proof.multipliers[i]) {
            RawTerm t{mono.coefficient, clause_factors};
            for (long long f : mono.factors) {
                const long long v = std::llabs(f);
                if (f == 0 || v > static_cast<long long>(formula.num_vars()))
                    throw Error(kModule, "monomial of clause " + std::to_string(i + 1) + " references variable " +
                                             std::to_string(v) + " out of range");
                t.factors.push_back(f);
            }
            raw.push_back(std::move(t));
        }
    }
    const auto sum = normalize(raw, formula.num_vars(), field);
    const auto result = pit_check_detailed(sum, 1);
    Verdict v = result.identical
                    ? Verdict::accept()
                    : Verdict::reject(Reason::identity_fails, "Σ m_i·g_i is not identically 1 modulo the Boolean ideal");
    v.stat("field", field.characteristic());
    v.stat("terms", result.terms);
    v.stat("max_layer", result.max_layer);
    return v;
}

SnsrProof parse_snsr(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(kModule, 1, "missing `p snsr` header");
    auto header = detail::parse_header(kModule, lines[0], 2);
    if (header.kind != "snsr") throw ParseError(kModule, lines[0].number, "expected `p snsr`");
    SnsrProof proof;
    proof.num_vars = static_cast<Var>(header.fields[0]);
    const auto m = static_cast<std::size_t>(header.fields[1]);
    proof.multipliers.resize(m);
    std::vector<bool> seen(m, false);

    std::size_t i = 1;
    while (i < lines.size()) {
        const auto& line = lines[i];
        const auto colon = line.text.find(':');
        if (colon == std::string_view::npos) throw ParseError(kModule, line.number, "expected `i : k`");
        auto left = detail::tokens(line.text.substr(0, colon));
        auto right = detail::tokens(line.text.substr(colon + 1));
        if (left.size() != 1 || right.size() != 1) throw ParseError(kModule, line.number, "expected `i : k`");
        const long long idx = detail::expect_integer(kModule, line.number, left[0]);
        const long long k = detail::expect_integer(kModule, line.number, right[0]);
        if (idx < 1 || static_cast<std::size_t>(idx) > m) throw ParseError(kModule, line.number, "clause index out of range");
        if (k < 0) throw ParseError(kModule, line.number, "negative monomial count");
        if (seen[idx - 1]) throw ParseError(kModule, line.number, "duplicate multiplier for clause " + std::to_string(idx));
        seen[idx - 1] = true;
        ++i;
        for (long long r = 0; r < k; ++r, ++i) {
            if (i >= lines.size()) throw ParseError(kModule, line.number, "missing monomial lines");
            const auto& mono_line = lines[i];
            auto toks = detail::tokens(mono_line.text);
            RawTerm term;
            std::size_t t = 0;
            if (!toks.empty() && toks[0] == "*") {
                if (toks.size() < 2) throw ParseError(kModule, mono_line.number, "missing coefficient after `*`");
                term.coefficient = detail::expect_integer(kModule, mono_line.number, toks[1]);
                t = 2;
            }
            if (toks.size() <= t || toks.back() != "0") throw ParseError(kModule, mono_line.number, "monomial must end with 0");
            for (; t + 1 < toks.size(); ++t) {
                const long long f = detail::expect_integer(kModule, mono_line.number, toks[t]);
                if (f == 0) throw ParseError(kModule, mono_line.number, "0 inside a monomial");
                if (std::llabs(f) > static_cast<long long>(proof.num_vars))
                    throw ParseError(kModule, mono_line.number, "variable " + std::to_string(f) + " out of range");
                term.factors.push_back(f);
            }
            proof.multipliers[idx - 1].push_back(std::move(term));
        }
    }
    return proof;
}

std::string serialize_snsr(const SnsrProof& proof) {
    std::ostringstream out;
    out << "p snsr " << proof.num_vars << ' ' << proof.multipliers.size() << '\n';
    for (std::size_t i = 0; i < proof.multipliers.size(); ++i) {
        const auto& g = proof.multipliers[i];
        if (g.empty()) continue;
        out << (i + 1) << " : " << g.size() << '\n';
        for (const auto& term : g) {
            if (term.coefficient != 1) out << "* " << term.coefficient << ' ';
            for (long long f : term.factors) out << f << ' ';
            out << "0\n";
        }
    }
    return out.str();
}

}  // namespace hitkit
