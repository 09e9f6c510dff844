#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hienet {

// All stochastic choices (splits, shuffles, weight draws) go through these
// helpers on top of std::mt19937_64, whose output sequence is fixed by the
// standard. std::shuffle and std::uniform_*_distribution are avoided because
// their algorithms are implementation-defined; with the helpers below, a seed
// produces the same splits and the same initial weights on every platform.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Fisher-Yates with uniform_index draws; deterministic for a fixed seed.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

// SplitMix64 step, used to derive independent sub-seeds from one user seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace hienet
