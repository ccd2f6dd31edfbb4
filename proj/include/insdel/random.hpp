#ifndef INSDEL_RANDOM_HPP
#define INSDEL_RANDOM_HPP

#include <cstdint>
#include <random>

namespace insdel {

// Uniform draw in [0, n) with rejection sampling.  Used instead of
// std::uniform_int_distribution, whose output is not pinned by the standard;
// seeded runs must replay identically across platforms.
inline std::uint64_t uniform_draw(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

}  // namespace insdel

#endif
