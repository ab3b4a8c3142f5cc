#pragma once

#include <cstdint>

namespace ngd {

// splitmix64 stream keyed by (seed, stream). Each Monte Carlo walk gets its
// own stream index, so ensembles are reproducible for a fixed seed no matter
// how the walks are scheduled across threads.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(mix(seed) + 0x9E3779B97F4A7C15ULL * (stream + 1));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // uniform in [0, 1) with 53 random bits
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in {0, ..., bound-1} via rejection, bias-free
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace ngd
