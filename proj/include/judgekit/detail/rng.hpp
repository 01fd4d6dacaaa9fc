#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace judgekit::detail {

// Thin wrapper over std::mt19937_64 that avoids the standard distribution
// classes: the engine's output sequence is specified, the distributions are
// not, so deriving values directly keeps seeded runs stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n). Modulo bias is < n / 2^64, irrelevant here.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller on hand-derived uniforms.
  double normal() {
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = unit();
    double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Order-preserving sample of k indices out of n (selection sampling).
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> picked;
    picked.reserve(k);
    std::size_t remaining = n, needed = k;
    for (std::size_t i = 0; i < n && needed > 0; ++i) {
      if (below(remaining) < needed) {
        picked.push_back(i);
        --needed;
      }
      --remaining;
    }
    return picked;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace judgekit::detail
