#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lexistat {

/// Deterministic random source for the simulator. The engine is the
/// standard mt19937_64, whose output sequence is fully specified, so runs
/// reproduce across platforms and standard libraries. Distributions are
/// derived here from raw engine words (never from std:: distribution
/// objects, which are implementation-defined).
///
/// Substreams: stream k is seeded with splitmix64(seed ^ (k+1)*GOLDEN), so
/// independent parts of a simulation (tree, one stream per meaning) can be
/// drawn in any order or in parallel without changing the result.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix(seed ^ (stream + 1) * 0x9E3779B97F4A7C15ull)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound), bound >= 1. Multiply-shift mapping;
  /// the O(bound/2^64) bias is irrelevant at the bounds used here.
  std::uint64_t uniform_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Exponential waiting time with the given rate (mean 1/rate).
  double exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace lexistat
