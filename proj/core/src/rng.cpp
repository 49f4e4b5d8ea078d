#include "normcov/rng.hpp"

namespace normcov {

namespace {
constexpr double kTwoPow53 = 9007199254740992.0;
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) / kTwoPow53; }

bool Rng::bernoulli(double p) {
  const auto draw = static_cast<double>(next() >> 11);
  return draw < p * kTwoPow53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace normcov
