// rng.hpp: deterministic draws on top of std::mt19937_64.
//
// std::uniform_real_distribution and friends are implementation-defined,
// so seeded runs would not be bit-identical across standard libraries.
// Everything random in this project goes through these two helpers.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace cqed::rng {

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (one draw per call; the sine partner
/// is discarded to keep the stream position independent of call history).
inline double standard_normal(std::mt19937_64& gen) {
    const double u1 = 1.0 - uniform01(gen); // (0, 1], keeps log finite
    const double u2 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace cqed::rng
