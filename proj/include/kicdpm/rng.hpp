#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace kicdpm {

// splitmix64 step; used only to derive stream seeds from a base seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic seed for stream `stream` under a base seed. Streams 0,1,2,...
// are used for independent subsystems (field draws, parameter init, chains).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base;
  const std::uint64_t mixed = splitmix64_next(s);
  s = mixed ^ (0x2545f4914f6cdd1dull * (stream + 1));
  return splitmix64_next(s);
}

// Seedable generator with explicit variate mappings. mt19937_64 output is
// bit-specified by the C++ standard; uniforms take the top 53 bits and
// normals use the Marsaglia polar method, so the draw sequence is a fixed
// function of the seed (std::*_distribution is never used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on (0, 1]
  double uniform_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // uniform integer on [lo, hi], rejection sampled (no modulo bias)
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x < limit) return lo + static_cast<std::int64_t>(x % span);
    }
  }

  // standard normal via Marsaglia polar; second variate of each pair cached
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace kicdpm
