// Deterministic sampling with a fixed bit-level generator, so identical
// (config, seed) runs reproduce byte-identical reports on one platform.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "tmlift/bundle.hpp"
#include "tmlift/metric.hpp"

namespace tmlift {

class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

private:
  uint64_t state_;
};

inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Stream seed for a named check at a given dimension: independent of check
// order and of which other checks run.
inline uint64_t stream_seed(uint64_t seed, const std::string& check, int n) {
  return seed ^ fnv1a(check) ^ (0x9E3779B97F4A7C15ull * static_cast<uint64_t>(n + 1));
}

// x in the family's sample box; y components in [-2, 2], redrawn while the
// metric norm of y stays below 0.1.
TangentPoint sample_point(const MetricSpec& spec, SplitMix64& rng);

// Same x-sampling, y rescaled to metric norm 1.
TangentPoint sample_unit_point(const MetricSpec& spec, SplitMix64& rng);

}  // namespace tmlift
