#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

namespace dialforge {

// splitmix64 finalizer. Good avalanche, cheap, stable across platforms.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Seed contract for per-record randomness:
//
//   record_seed(base, id) = mix64(fnv1a64(utf8 bytes of id) XOR base)
//
// The seed depends only on the base seed and the record id, never on the
// record's position in the corpus or on worker scheduling.
inline std::uint64_t record_seed(std::uint64_t base_seed, std::string_view record_id) {
    return mix64(fnv1a64(record_id) ^ base_seed);
}

// Draws uniformly from [0, bound) using rejection so results do not depend
// on the standard library's distribution internals. bound must be >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max64 % bound + 1) % bound;  // 2^64 mod bound
    std::uint64_t x = rng();
    while (rem != 0 && x >= max64 - rem + 1) x = rng();
    return x % bound;
}

// Fisher-Yates permutation of v, seeded. Same (v, seed) -> same order.
template <typename T>
inline void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Uniform k-subset of {0, ..., n-1}, returned in ascending order.
// Partial Fisher-Yates: the first k slots of a uniform permutation.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace dialforge
