#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace hrpb {

// Reproducibility contract: every random quantity in this library is derived
// from the generators below, never from std::random, so a (seed, shape) pair
// produces identical bytes on every build. The chain is fixed:
// SplitMix64 expands the user seed into xoshiro256++ state, xoshiro256++
// supplies uniforms, Box-Muller turns uniform pairs into Gaussians.

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Derives a stream seed from a base seed and a salt, so distinct consumers
// (projection fill, shuffles, fold assignment) never share a stream.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) noexcept {
  SplitMix64 g(base + 0x9e3779b97f4a7c15ULL * (salt + 1));
  return g.next();
}

class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed) noexcept {
    SplitMix64 g(seed);
    for (auto& w : state_) w = g.next();
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 significant bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform double in (0, 1]; the shifted range keeps log() finite.
  double uniform_positive() noexcept {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Unbiased integer in [0, n) by rejection. n must be nonzero.
  std::uint64_t next_below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Standard normal draws via the Box-Muller transform. Draws arrive in
// pairs (cos first, sin cached), so consuming k values always advances the
// underlying generator by 2*ceil(k/2) words.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) noexcept : rng_(seed) {}

  double next() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = rng_.uniform_positive();
    const double u2 = rng_.uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  Xoshiro256PlusPlus rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// In-place Fisher-Yates shuffle driven by the library generator.
template <typename T>
void seeded_shuffle(std::vector<T>& values, Xoshiro256PlusPlus& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::uint64_t j = rng.next_below(i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace hrpb
