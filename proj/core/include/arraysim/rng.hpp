// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace arraysim {

/// All randomness flows through caller-owned generators of this type.
using Rng = std::mt19937_64;

/// One SplitMix64 scrambling step.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a child seed from a base seed and a path of indices (stream id,
/// value index, realization index, ...). The fold is order-sensitive, so
/// sibling streams and permuted paths get unrelated seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(base);
    for (std::uint64_t p : path)
        s = splitmix64(s ^ splitmix64(p + 0x632be59bd9b4e019ULL));
    return s;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

} // namespace arraysim
