#include "hitkit/gf2t.hpp"

#include <array>
#include <string>

#include "hitkit/error.hpp"

namespace hitkit {

namespace {

constexpr std::array<std::uint32_t, 17> kModuli = {
    0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,   0x83,    0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

void check_degree(unsigned t) {
    if (t < 2 || t > 16) throw Error("gf2-algebra", "field degree " + std::to_string(t) + " outside 2..16");
}

void check_same_field(const Gf2tElement& a, const Gf2tElement& b) {
    if (a.degree() != b.degree()) throw Error("gf2-algebra", "operands from different fields");
}

}  // namespace

std::uint32_t irreducible_modulus(unsigned t) {
    check_degree(t);
    return kModuli[t];
}

Gf2tElement::Gf2tElement(unsigned t, std::uint32_t coeffs) : t_(t), coeffs_(coeffs) {
    const std::uint32_t m = irreducible_modulus(t);
    for (int bit = 31; bit >= static_cast<int>(t); --bit)
        if ((coeffs_ >> bit) & 1u) coeffs_ ^= m << (bit - static_cast<int>(t));
}

Gf2tElement operator+(Gf2tElement a, Gf2tElement b) {
    check_same_field(a, b);
    return {a.t_, a.coeffs_ ^ b.coeffs_};
}

Gf2tElement gf2t_mul(Gf2tElement a, Gf2tElement b) {
    check_same_field(a, b);
    const unsigned t = a.degree();
    const std::uint32_t m = a.modulus();
    std::uint32_t x = a.coeffs(), y = b.coeffs(), acc = 0;
    while (y) {
        if (y & 1u) acc ^= x;
        y >>= 1;
        x <<= 1;
        if ((x >> t) & 1u) x ^= m;
    }
    return {t, acc};
}

Gf2tElement gf2t_pow(Gf2tElement a, std::uint64_t e) {
    Gf2tElement result = Gf2tElement::one(a.degree());
    while (e) {
        if (e & 1u) result = gf2t_mul(result, a);
        a = gf2t_mul(a, a);
        e >>= 1;
    }
    return result;
}

Gf2tElement gf2t_inv(Gf2tElement a) {
    if (a.is_zero()) throw Error("gf2-algebra", "inverse of zero in GF(2^t)");
    // a^(2^t - 2) = a^-1 in the multiplicative group of order 2^t - 1.
    return gf2t_pow(a, (std::uint64_t{1} << a.degree()) - 2);
}

}  // namespace hitkit
