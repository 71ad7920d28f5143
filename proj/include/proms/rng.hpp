#pragma once

#include <cstdint>
#include <random>

namespace proms {

// SplitMix64 finalizer. Used to derive independent seeds for sub-streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seedable 64-bit random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The std distributions are not, so every derived draw (bounded
/// integers, unit reals, coin flips) is computed here from raw engine output.
/// The same seed therefore gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection;
  /// bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = engine_();
    auto wide = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(wide);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = engine_();
        wide = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(wide);
      }
    }
    return static_cast<std::uint64_t>(wide >> 64);
  }

  /// Uniform real in [0, 1) carrying 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Independent stream number `index` derived from this generator's seed.
  /// Does not advance this generator.
  Rng split(std::uint64_t index) const {
    return Rng(splitmix64(seed_ ^ splitmix64(index + 1)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace proms
