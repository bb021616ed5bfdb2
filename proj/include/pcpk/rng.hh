#pragma once

#include <cstdint>
#include <random>

namespace pcpk
{
    /// std::mt19937_64 is fully specified by the standard; the draws below avoid the
    /// implementation-defined distributions so seeded output is identical on every platform.
    using Rng = std::mt19937_64;

    inline auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Per-instance seed, independent of scheduling.
    inline auto derive_seed(std::uint64_t base, std::uint64_t index) -> std::uint64_t
    {
        return splitmix64(splitmix64(base) ^ (index * 0xd1342543de82ef95ULL + 1));
    }

    /// Uniform in [0, bound); bound > 0.
    inline auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
    {
        auto limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = rng();
        while (x >= limit);
        return x % bound;
    }

    inline auto uniform_in(Rng & rng, std::uint64_t lo, std::uint64_t hi) -> std::uint64_t
    {
        return lo + uniform_below(rng, hi - lo + 1);
    }

    inline auto bernoulli(Rng & rng, double p) -> bool
    {
        return double(rng() >> 11) * 0x1.0p-53 < p;
    }
}
