#pragma once

#include <cstdint>
#include <random>

namespace sobrf {

// Sub-stream derivation: every consumer of randomness owns a named stream
// derived from (seed, tag) through splitmix64, so adding or removing one
// stream never perturbs the others. This keeps e.g. Theta identical across
// tau values at the same seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(splitmix64(seed) ^ splitmix64(tag));
}

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t tag) {
    return std::mt19937_64(substream_seed(seed, tag));
}

// Fixed stream tags used across the library.
namespace stream {
constexpr std::uint64_t theta = 0x7468657461ULL;       // "theta"
constexpr std::uint64_t teacher = 0x746561636852ULL;   // teacher vector
constexpr std::uint64_t subspace = 0x766bULL;          // V_k
constexpr std::uint64_t inputs = 0x78ULL;              // X
constexpr std::uint64_t noise = 0x6e6f697365ULL;       // training noise
constexpr std::uint64_t test = 0x74657374ULL;          // test draws
constexpr std::uint64_t zeta = 0x7a657461ULL;          // diagonal projections
constexpr std::uint64_t gaussian_mc = 0x67626d63ULL;   // Gaussian-block MC
constexpr std::uint64_t surrogate = 0x676574ULL;       // GET surrogate noise
}  // namespace stream

}  // namespace sobrf
