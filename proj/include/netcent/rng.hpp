#pragma once

#include <cstdint>

namespace netcent::rng {

// SplitMix64 finalizer. All randomness in the library is derived by hashing
// (seed, stream tag, indices) so that draws are order-independent and
// replications can run in parallel with sequential-identical results.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
    return mix(h ^ v);
}

// Stream tags keep pair draws, triangle draws and replication seeds in
// disjoint hash domains.
inline constexpr std::uint64_t kPairStream = 0x706169722d646f74ULL;
inline constexpr std::uint64_t kTriangleStream = 0x7472692d64726177ULL;
inline constexpr std::uint64_t kReplicationStream = 0x7265702d73656564ULL;
inline constexpr std::uint64_t kRestartStream = 0x7265737461727421ULL;

// Uniform double in [0, 1) with 53 random bits.
inline double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline double pair_uniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    std::uint64_t h = combine(kPairStream, seed);
    h = combine(h, i);
    h = combine(h, j);
    return to_unit(h);
}

inline double triangle_uniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j,
                               std::uint64_t k) {
    std::uint64_t h = combine(kTriangleStream, seed);
    h = combine(h, i);
    h = combine(h, j);
    h = combine(h, k);
    return to_unit(h);
}

// Seed for replication r derived from a master seed; netmodel samplers then
// hash per pair, so running replications in any order gives identical output.
inline std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t rep) {
    return combine(combine(kReplicationStream, master_seed), rep);
}

}  // namespace netcent::rng
