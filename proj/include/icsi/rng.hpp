#pragma once

#include <cstdint>
#include <vector>

namespace icsi {

/// SplitMix64 in counter form: output i is mix(seed + (i + 1) * 0x9E3779B97F4A7C15).
/// Any implementation of the same two lines reproduces sampled-mode runs;
/// tests/test_rng.cpp pins reference vectors.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t at(std::uint64_t counter) const noexcept { return mix(seed_ + (counter + 1) * kGamma); }
  std::uint64_t next() noexcept { return at(counter_++); }
  std::uint64_t counter() const noexcept { return counter_; }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept { return lo + below(hi - lo + 1); }
  /// `size` distinct values from [0, n), ascending (Floyd's algorithm).
  std::vector<std::size_t> sample(std::size_t n, std::size_t size);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace icsi
