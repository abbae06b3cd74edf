// SPDX-License-Identifier: MIT
//
// Deterministic random generation for the property suites.  A fixed
// splitmix64 stream is used instead of <random> distributions because the
// standard distributions are not required to produce identical sequences
// across library implementations, and counterexample reports must replay
// bit-for-bit everywhere.

#ifndef POLYADICA_RNG_HPP
#define POLYADICA_RNG_HPP

#include <cstdint>

#include "polyadica/scalar.hpp"

namespace polyadica {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Integer in [lo, hi], inclusive.  The modulo bias is irrelevant for
    /// test-case generation and keeps the mapping platform-stable.
    long long range(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    /// Uniform double in [lo, hi] built from the top 53 bits.
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

private:
    std::uint64_t state_;
};

/// Random scalar for property sweeps.  Rational mode draws numerators in
/// [-9, 9] and denominators in [1, 9]; float mode draws uniformly from
/// [-10, 10].  With `invertible`, values near zero are excluded.
template <class S>
S random_scalar(SplitMix64& rng, bool invertible = false);

template <>
inline Rational random_scalar<Rational>(SplitMix64& rng, bool invertible) {
    long long num = rng.range(-9, 9);
    if (invertible) {
        while (num == 0) num = rng.range(-9, 9);
    }
    const long long den = rng.range(1, 9);
    return Rational(num, den);
}

template <>
inline F64 random_scalar<F64>(SplitMix64& rng, bool invertible) {
    double v = rng.uniform(-10.0, 10.0);
    if (invertible) {
        while (v > -0.25 && v < 0.25) v = rng.uniform(-10.0, 10.0);
    }
    return F64(v);
}

}  // namespace polyadica

#endif  // POLYADICA_RNG_HPP
