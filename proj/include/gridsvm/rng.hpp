#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// Sampling helpers built on std::mt19937_64 raw draws only. The standard
// distribution classes are implementation-defined, so going through these
// keeps seeded runs byte-identical across toolchains.

namespace gridsvm {

using Rng = std::mt19937_64;

// Uniform in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller (one value per call, two uniforms consumed).
inline double standard_normal(Rng& rng) {
    const double u1 = 1.0 - uniform01(rng);  // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline double normal(double mean, double sd, Rng& rng) {
    return mean + sd * standard_normal(rng);
}

// Index draw from unnormalized non-negative weights.
template <typename Weights>
int weighted_index(const Weights& weights, Rng& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform01(rng) * total;
    int last = 0;
    int i = 0;
    for (double w : weights) {
        u -= w;
        if (u < 0.0) return i;
        last = i;
        ++i;
    }
    return last;  // u landed on the tail due to rounding
}

// In-place Fisher-Yates; deterministic for a fixed seed on every platform.
template <typename Vec>
void shuffle_indices(Vec& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace gridsvm
