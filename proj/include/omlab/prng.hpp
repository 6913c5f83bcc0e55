#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace omlab {

// Seeded portable generator (splitmix64). Experiments must replay bit-for-bit
// across platforms, which rules out std:: distributions; the raw stream and
// the uniform/gaussian mappings below are fully pinned down here.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // standard normal via Box-Muller; the log argument is kept away from 0
    double gaussian() {
        double u = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
        double v = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
    }

    // complex with independent standard normal real and imaginary parts
    std::complex<double> gaussian_complex() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }
};

} // namespace omlab
