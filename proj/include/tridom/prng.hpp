#pragma once

#include <cstdint>

namespace tridom {

// splitmix64: tiny seedable generator with a fixed, documented stream so
// generator output is reproducible across builds and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) without modulo bias worth caring about here;
    // bound is always tiny compared to 2^64.
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

private:
    uint64_t state_;
};

} // namespace tridom
