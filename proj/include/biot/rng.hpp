#pragma once

#include <cstdint>
#include <random>

namespace biot {

/// splitmix64 finalizer (Steele, Lea, Flood 2014). Used both to decorrelate
/// user seeds and to derive independent per-trial stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the index-th child stream of `base`. This is the documented
/// mixing function for parallel Monte Carlo: child i gets the i-th output
/// of the splitmix64 sequence started at `base`, so distinct (base, index)
/// pairs map to decorrelated seeds and derivation is O(1) in the index.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base + index * 0x9e3779b97f4a7c15ULL);
}

/// Deterministic random stream: a seeded mt19937_64 with an explicit
/// 53-bit uniform. Streams are value types; every consumer owns its own.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// True with probability p. p <= 0 never fires, p >= 1 always fires.
    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

} // namespace biot
