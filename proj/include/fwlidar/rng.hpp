#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace fwlidar {

/// Uniform double in [0, 1) from the top 53 bits of the engine output.
/// Avoids std::uniform_real_distribution so streams are identical across
/// standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal draw via Box-Muller; two engine calls per draw, no cache.
inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace fwlidar
