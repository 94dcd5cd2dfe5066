/**
 * @file random.hpp
 * @brief Portable deterministic sampling helpers.
 *
 * std::uniform_int_distribution is implementation-defined, so reproducible
 * output across platforms draws from mt19937_64 (whose sequence is fixed
 * by the standard) through these helpers instead.
 */

#pragma once

#include <cstdint>
#include <random>

namespace maxvec {

/// Unbiased uniform draw from [0, bound); bound must be nonzero.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = rng();
    while (x < threshold) x = rng();
    return x % bound;
}

/// Uniform draw from the closed range [lo, hi].
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace maxvec
