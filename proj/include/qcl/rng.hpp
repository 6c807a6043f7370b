#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qcl {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Derives a child seed from a parent seed, a stream tag and an index.
// Streams are hierarchical (master -> stage -> trial) so that adding trials
// never perturbs the streams of existing ones.
inline std::uint64_t derive_seed(std::uint64_t parent, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = detail::splitmix64(parent);
  for (unsigned char c : tag) {
    h = (h ^ c) * 0x100000001b3ull;  // FNV-1a step
  }
  return detail::splitmix64(h ^ detail::splitmix64(index));
}

// Seeded random stream. The engine is std::mt19937_64 (its output sequence
// is fixed by the standard); value extraction is done here rather than with
// std::*_distribution so that results do not depend on the standard library
// implementation.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform angle in [-pi, pi).
  double next_angle() {
    return -std::numbers::pi + 2.0 * std::numbers::pi * next_double();
  }

  // Rademacher draw: +1 or -1 with equal probability.
  int next_sign() { return (next_u64() & 1ull) ? 1 : -1; }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Uniform integer in [0, bound), unbiased by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  // Fisher-Yates shuffle driven by this stream.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[next_below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace qcl
