#pragma once

// Bit-packed linear algebra over GF(2).
//
// An AffineSystem over n variables stores each equation as one augmented
// row of n + 1 bits: bit (v - 1) is the coefficient of x_v and bit n is the
// right-hand side. Elimination runs over the augmented rows in one pass.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hitkit {

using Var = std::uint32_t;

class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    // Both operands must have the same size.
    BitVector& operator^=(const BitVector& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    bool none() const noexcept;
    std::size_t count() const noexcept;
    std::size_t find_first() const noexcept { return find_next(0); }
    // First set bit at position >= from, or npos.
    std::size_t find_next(std::size_t from) const noexcept;

    // Copy with a different length; bits beyond the new size are dropped.
    BitVector resized(std::size_t size) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class AffineSystem {
public:
    AffineSystem() = default;
    explicit AffineSystem(std::size_t num_vars) : num_vars_(num_vars) {}

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t size() const noexcept { return rows_.size(); }
    std::span<const BitVector> rows() const noexcept { return rows_; }

    // x_{v1} + ... + x_{vk} = rhs. Repeated variables cancel.
    void add_equation(std::span<const Var> vars, bool rhs);
    // Row of width num_vars() + 1, rhs in the last bit.
    void add_row(BitVector row);

    BitVector make_row(std::span<const Var> vars, bool rhs) const;

    // Same equations over a larger variable universe.
    AffineSystem widened(std::size_t num_vars) const;

    bool satisfied_by(std::span<const std::uint8_t> assignment) const;

private:
    std::size_t num_vars_ = 0;
    std::vector<BitVector> rows_;
};

struct Echelon {
    std::size_t rank = 0;       // pivots among variable columns
    bool consistent = true;     // false iff 0 = 1 is derivable
    AffineSystem basis;         // reduced row echelon form, pivot columns strictly increasing
    std::vector<std::size_t> pivots;  // pivot column of each basis row
};

Echelon echelonize(const AffineSystem& system);

// True iff every solution of a consistent system satisfies the equation.
// Throws hitkit::Error if the system is inconsistent.
bool implies(const AffineSystem& system, std::span<const Var> vars, bool rhs);
bool implies(const Echelon& echelon, const BitVector& row);

// True iff the two solution sets do not intersect. Systems over different
// universes are compared over the larger one.
bool disjoint(const AffineSystem& a, const AffineSystem& b);

}  // namespace hitkit
