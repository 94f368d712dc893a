#pragma once

#include <cstdint>
#include <random>

namespace qpe::rng {

/** SplitMix64 finalizer; used for seed expansion and replica-stream derivation. */
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/** Independent stream seed for Monte Carlo replica `index` under a base seed. */
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/**
 * Deterministic uniform source: std::mt19937_64 (bit-specified by the standard)
 * seeded through splitmix64; doubles take the top 53 bits.
 */
class Engine {
  public:
    explicit Engine(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    std::uint64_t bits() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace qpe::rng
