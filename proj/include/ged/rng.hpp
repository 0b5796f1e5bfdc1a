#pragma once

#include <cstdint>
#include <random>

namespace ged {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a master seed and an index path,
/// e.g. derive_seed(master, shot) or derive_seed(master, n, p_idx). Streams
/// for distinct paths are decorrelated, so restarts can run in any order
/// (or in parallel) and still reproduce the serial results.
inline uint64_t derive_seed(uint64_t master, uint64_t a) {
  return splitmix64(splitmix64(master) ^ splitmix64(a + 0x1234567));
}

inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b) {
  return derive_seed(derive_seed(master, a), b);
}

/// Deterministic RNG with explicit bit-to-double mapping. The raw engine is
/// std::mt19937_64 (fully specified by the standard); doubles and bounded
/// ints are derived by hand so results do not depend on any library's
/// distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  int uniform_int(int n) {
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ged
