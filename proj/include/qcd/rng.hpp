#pragma once

#include <cstdint>
#include <random>

namespace qcd {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Combine a master seed with an index into a decorrelated child seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

// Deterministic random source. All sampling goes through this wrapper so
// results are identical across platforms and runs. mt19937_64 has a
// standardized output sequence; uniforms are built from the top 53 bits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Independent child source for (master, index). Per-trial and per-stream
    // sub-streams are derived this way so parallel work stays repeatable.
    static Rng substream(std::uint64_t master, std::uint64_t index) {
        return Rng(mix_seed(master, index));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qcd
