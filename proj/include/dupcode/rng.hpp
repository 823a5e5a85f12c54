#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace dupcode {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Independent stream for item `index` of a seeded batch; lets parallel and
// serial sweeps draw identical per-item randomness.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 1));
}

// Unbiased draw from [0, n). std::uniform_int_distribution is not portable
// across standard libraries; this is, since mt19937_64 itself is pinned by
// the standard.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return v % n;
}

}  // namespace dupcode
