#pragma once

#include <cstdint>

namespace raintensity {

/// Counter-based 64-bit PRNG (splitmix64). State advances by a fixed odd
/// increment, output is a bijective mix of the counter, so streams seeded
/// apart never correlate and seeding is splittable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double strictly inside (0, 1): 53-bit mantissa centered on the
  /// half-steps, so 0 and 1 are never returned.
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Derive an independent stream for substream `id`.
  SplitMix64 split(std::uint64_t id) const {
    SplitMix64 mixer(state_ ^ (0xA0761D6478BD642FULL * (id + 1)));
    return SplitMix64(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace raintensity
