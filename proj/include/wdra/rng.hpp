#pragma once

// Deterministic random streams. The engine is mt19937_64 (its output
// sequence is pinned by the standard); all distribution transforms are
// hand-rolled here so draws are reproducible bit-for-bit regardless of
// the standard library in use.

#include <cmath>
#include <cstdint>
#include <random>

namespace wdra {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substream id for (seed, index [, tag]). Changing n_paths or
// adding streams never perturbs existing ones.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index,
                               std::uint64_t tag = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ index) ^ tag);
}

class Rng {
 public:
  explicit Rng(std::uint64_t stream) : eng_(stream) {}

  // Uniform on (0, 1]; never returns 0 so logs are safe.
  double u01() {
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Box-Muller, two uniforms per draw (fixed consumption keeps streams
  // alignment-free).
  double normal() {
    const double u1 = u01();
    const double u2 = u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double exponential(double rate) { return -std::log(u01()) / rate; }

  // Fisher-Yates with an engine-modulo index draw (bias < 2^-53 for any
  // realistic n, and fully deterministic).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(eng_() % i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace wdra
