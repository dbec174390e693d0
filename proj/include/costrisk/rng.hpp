#pragma once

#include <cstdint>

namespace costrisk {

// Counter-based generator built on the splitmix64 finalizer. Every variate is
// a pure function of (seed, stream, substream, counter), so any draw can be
// reproduced in isolation and parallel workers need no shared state.
class CounterRng {
public:
    struct Key {
        std::uint64_t hi = 0;
        std::uint64_t lo = 0;
    };

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    // splitmix64 output function: xor-shift/multiply avalanche of z.
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    // Derives an independent key for a (stream, substream) pair under a seed.
    static Key key(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
        Key k;
        k.hi = mix(seed + kGamma + mix(stream + kGamma));
        k.lo = mix(k.hi + kGamma + mix(substream + kGamma));
        return k;
    }

    static std::uint64_t next_u64(const Key& k, std::uint64_t counter) {
        return mix(k.lo + counter * kGamma + mix(k.hi + counter));
    }

    // Uniform variate strictly inside (0,1): 53-bit mantissa offset by half an
    // ulp, so neither endpooint is reachable.
    static double uniform(const Key& k, std::uint64_t counter) {
        const std::uint64_t bits = next_u64(k, counter);
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53;
    }
};

// Inverse of the standard normal CDF (Acklam's rational approximation,
// relative error below 1.15e-9 across (0,1)). Throws std::invalid_argument
// outside the open interval.
double inverse_normal_cdf(double p);

}  // namespace costrisk
