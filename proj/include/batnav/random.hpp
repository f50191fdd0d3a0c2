#pragma once

#include <cstdint>
#include <random>

namespace batnav {

// Seeded uniform random stream.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// standard, and doubles are derived from the raw 64-bit words by plain
// arithmetic (top 53 bits scaled by 2^-53). No std::*_distribution is used
// anywhere, so identical seeds replay bit-identically across compilers and
// standard libraries.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform01() - 1.0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace batnav
