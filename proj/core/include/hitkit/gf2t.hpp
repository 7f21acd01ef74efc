#pragma once

#include <cstdint>

namespace hitkit {

// Lexicographically least irreducible polynomial of degree t over GF(2),
// bit i holding the coefficient of x^i. Defined for 2 <= t <= 16.
std::uint32_t irreducible_modulus(unsigned t);

// Element of GF(2^t) as a bit polynomial of degree < t, reduced modulo
// irreducible_modulus(t).
class Gf2tElement {
public:
    Gf2tElement(unsigned t, std::uint32_t coeffs);

    static Gf2tElement zero(unsigned t) { return {t, 0}; }
    static Gf2tElement one(unsigned t) { return {t, 1}; }

    unsigned degree() const noexcept { return t_; }
    std::uint32_t coeffs() const noexcept { return coeffs_; }
    std::uint32_t modulus() const noexcept { return irreducible_modulus(t_); }
    bool is_zero() const noexcept { return coeffs_ == 0; }
    bool coeff(unsigned i) const noexcept { return (coeffs_ >> i) & 1u; }

    friend Gf2tElement operator+(Gf2tElement a, Gf2tElement b);
    friend bool operator==(const Gf2tElement&, const Gf2tElement&) = default;

private:
    unsigned t_;
    std::uint32_t coeffs_;
};

Gf2tElement gf2t_mul(Gf2tElement a, Gf2tElement b);
// Throws hitkit::Error for the zero element.
Gf2tElement gf2t_inv(Gf2tElement a);
Gf2tElement gf2t_pow(Gf2tElement a, std::uint64_t e);

}  // namespace hitkit
