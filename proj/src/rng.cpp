#include "icsi/rng.hpp"

#include <algorithm>
#include <set>

namespace icsi {

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::size_t> SplitMix64::sample(std::size_t n, std::size_t size) {
  size = std::min(size, n);
  std::set<std::size_t> chosen;
  for (std::size_t j = n - size; j < n; ++j) {
    const auto t = static_cast<std::size_t>(below(j + 1));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace icsi
