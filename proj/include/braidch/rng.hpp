#pragma once

#include <cstdint>
#include <random>

#include "braidch/braid.hpp"

namespace braidch {

// Seeded PRNG with explicit sampling maps so experiment reports are
// reproducible bit for bit. The engine is mt19937_64; samples avoid
// std::*_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  // Uniform-ish value in [0, m); modulo bias is irrelevant for experiment
  // sampling and keeps the map trivially portable.
  std::uint64_t below(std::uint64_t m) { return m == 0 ? 0 : gen_() % m; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 gen_;
};

// Random braid word with exactly `len` letters, uniform over +/-[1, n-1].
BraidWord random_braid(Rng& rng, int n, int len);

}  // namespace braidch
