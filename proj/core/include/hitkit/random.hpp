#pragma once

#include <cstdint>

namespace hitkit {

// SplitMix64. State advances by 0x9E3779B97F4A7C15; output mixes with
// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB and shifts 30/27/31.
// Every generator in this library draws from it so seeded outputs are
// reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) for bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() noexcept { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x6869746b6974ull;  // "hitkit"

}  // namespace hitkit
