// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace localize {

/// Counter-based deterministic random stream. The n-th output is a pure
/// function of (seed, stream, n), so shards can be cut anywhere and every
/// worker derives its own stream from (seed, worker-index) without
/// coordination. Output function is the SplitMix64 finalizer over
/// key + n * golden-gamma.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(derive_key(seed, stream)) {}

    std::uint64_t next_u64() { return mix(key_ + (ctr_++) * kGamma); }

    /// Uniform in [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0,1]; safe under log().
    double next_double_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal pair via Box-Muller. Each call consumes exactly two
    /// uniforms, keeping the stream position input-independent.
    void next_gaussian_pair(double& g0, double& g1) {
        const double u = next_double_open();
        const double v = next_double();
        const double r = std::sqrt(-2.0 * std::log(u));
        g0 = r * std::cos(2.0 * kPi * v);
        g1 = r * std::sin(2.0 * kPi * v);
    }

    /// Complex standard normal (independent N(0,1) real and imaginary parts).
    std::complex<double> next_complex_gaussian() {
        double a, b;
        next_gaussian_pair(a, b);
        return {a, b};
    }

    /// Exponential with unit rate.
    double next_exponential() { return -std::log(next_double_open()); }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        return mix(mix(seed + kGamma) ^ mix(stream * kGamma + 0x1F123BB5159A55E5ull));
    }

    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

}  // namespace localize
