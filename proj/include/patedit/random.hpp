// Seeded randomness. The generator is fixed so that seeds are portable:
// everything derives from the splitmix64 mixing function
//
//   mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//           z ^= z >> 27; z *= 0x94D049BB133111EB;
//           z ^= z >> 31; return z;
//
// used counter-style: the t-th output of a stream with seed `seed` is
// mix(seed + (t+1) * 0x9E3779B97F4A7C15). random_coloring(m, n, s, seed)
// assigns cell (i, j) (0-based, row-major counter t = i*n + j) the symbol
// 1 + output(t) mod s. Sub-seeds for trial i come from the stream of the
// hashed master seed, so parallel and serial schedules agree.

#pragma once

#include <cstdint>

#include "patedit/matrix.hpp"

namespace patedit {

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// t-th output of the stream identified by `seed`.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64_mix(seed + (counter + 1) * kSplitMix64Gamma);
}

constexpr std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64_at(splitmix64_mix(seed), index);
}

// Sequential form, for sampling loops.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kSplitMix64Gamma;
        return splitmix64_mix(state_);
    }

    // Uniform in [0, n); the modulo bias of n / 2^64 is negligible here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Each cell independently uniform over {1,...,s}; bit-reproducible given
// the seed.
inline SymbolMatrix random_coloring(int m, int n, int s, std::uint64_t seed) {
    if (m < 1 || n < 1 || s < 1) throw std::invalid_argument("m, n, s must be positive");
    std::vector<int> entries(static_cast<std::size_t>(m) * n);
    for (std::size_t t = 0; t < entries.size(); ++t)
        entries[t] = 1 + static_cast<int>(splitmix64_at(seed, t) % static_cast<std::uint64_t>(s));
    return SymbolMatrix(m, n, s, std::move(entries));
}

}  // namespace patedit
