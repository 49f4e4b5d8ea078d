#pragma once

#include <cstdint>
#include <random>

namespace normcov {

/// Portable seeded generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Standard distributions are implementation-defined, so every
/// derived quantity here is computed from raw 64-bit outputs:
///
///   * uniform01()   = (next() >> 11) * 2^-53
///   * bernoulli(p)  = (next() >> 11) < p * 2^53           (exactly one draw)
///   * below(b)      = next() % b, rejecting next() < (2^64 - b) % b
///
/// Independent streams (per trial, per chunk) use derive_seed(base, stream).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  bool bernoulli(double p);
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser applied to base + (stream + 1) * 0x9E3779B97F4A7C15.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

}  // namespace normcov
