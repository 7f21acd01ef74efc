#include "hitkit/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "hitkit/error.hpp"

namespace hitkit {

bool BitVector::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
    if (from >= size_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (word != 0) {
            const std::size_t pos = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            return pos < size_ ? pos : npos;
        }
        if (++w == words_.size()) return npos;
        word = words_[w];
    }
}

BitVector BitVector::resized(std::size_t size) const {
    BitVector out(size);
    const std::size_t n = std::min(words_.size(), out.words_.size());
    std::copy_n(words_.begin(), n, out.words_.begin());
    if (size & 63 && !out.words_.empty()) out.words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
    return out;
}

BitVector AffineSystem::make_row(std::span<const Var> vars, bool rhs) const {
    BitVector row(num_vars_ + 1);
    for (Var v : vars) {
        if (v == 0 || v > num_vars_) throw Error("gf2-algebra", "variable " + std::to_string(v) + " out of range");
        row.flip(v - 1);
    }
    row.set(num_vars_, rhs);
    return row;
}

void AffineSystem::add_equation(std::span<const Var> vars, bool rhs) { rows_.push_back(make_row(vars, rhs)); }

void AffineSystem::add_row(BitVector row) {
    if (row.size() != num_vars_ + 1) throw Error("gf2-algebra", "row width mismatch");
    rows_.push_back(std::move(row));
}

AffineSystem AffineSystem::widened(std::size_t num_vars) const {
    if (num_vars < num_vars_) throw Error("gf2-algebra", "cannot shrink variable universe");
    AffineSystem out(num_vars);
    for (const auto& row : rows_) {
        BitVector wide = row.resized(num_vars + 1);
        wide.set(num_vars_, false);
        wide.set(num_vars, row.get(num_vars_));
        out.rows_.push_back(std::move(wide));
    }
    return out;
}

bool AffineSystem::satisfied_by(std::span<const std::uint8_t> assignment) const {
    for (const auto& row : rows_) {
        bool acc = row.get(num_vars_);
        for (std::size_t c = row.find_first(); c < num_vars_; c = row.find_next(c + 1)) acc ^= assignment[c] != 0;
        if (acc) return false;
    }
    return true;
}

Echelon echelonize(const AffineSystem& system) {
    const std::size_t n = system.num_vars();
    std::vector<BitVector> rows(system.rows().begin(), system.rows().end());
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col <= n && next < rows.size(); ++col) {
        std::size_t r = next;
        while (r < rows.size() && !rows[r].get(col)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[next]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);

    Echelon out;
    out.consistent = pivots.empty() || pivots.back() != n;
    out.rank = out.consistent ? pivots.size() : pivots.size() - 1;
    out.basis = AffineSystem(n);
    for (auto& row : rows) out.basis.add_row(std::move(row));
    out.pivots = std::move(pivots);
    return out;
}

bool implies(const Echelon& echelon, const BitVector& row) {
    if (!echelon.consistent) throw Error("gf2-algebra", "implication queried on an inconsistent system");
    BitVector rest = row;
    const auto basis = echelon.basis.rows();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (rest.get(echelon.pivots[i])) rest ^= basis[i];
    return rest.none();
}

bool implies(const AffineSystem& system, std::span<const Var> vars, bool rhs) {
    return implies(echelonize(system), system.make_row(vars, rhs));
}

bool disjoint(const AffineSystem& a, const AffineSystem& b) {
    const std::size_t n = std::max(a.num_vars(), b.num_vars());
    AffineSystem joint = a.widened(n);
    const AffineSystem other = b.widened(n);
    for (const auto& row : other.rows()) joint.add_row(row);
    return !echelonize(joint).consistent;
}

}  // namespace hitkit
