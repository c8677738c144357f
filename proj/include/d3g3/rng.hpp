#pragma once

#include <cstdint>
#include <random>

namespace d3g3 {

// Seeded random stream used everywhere in the library. Uniform doubles are
// derived from raw 64-bit draws so that replay is bit-identical for a given
// seed, independent of the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Spawns an independent stream; used to give each replicate its own
    // deterministic substream.
    Rng split() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 engine_;
};

}  // namespace d3g3
