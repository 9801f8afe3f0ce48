#pragma once

// Counter-based splittable random number generation.  Stream i of a run
// with seed s is a pure function of (s, i), so replicates can be drawn
// concurrently in disjoint index ranges with bitwise reproducibility.

#include <cstdint>
#include <cmath>

namespace stablelab::detail {

// SplitMix64 output function (Vigna's fixed-increment variant).
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stateless mix of (seed, index) into a stream-start state.  Two rounds of
// the output function decorrelate adjacent indices.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xA0761D6478BD642FULL * (index + 1));
    std::uint64_t a = splitmix64_next(s);
    s ^= a;
    return splitmix64_next(s);
}

// One independent stream; cheap to construct per counter value.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t index) : state_(mix_seed(seed, index)) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform on the open interval (0,1); endpoints excluded so that
    // log() and inverse-CDF transforms stay finite.
    double next_open01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_exponential() { return -std::log(next_open01()); }

private:
    std::uint64_t state_;
};

}  // namespace stablelab::detail
