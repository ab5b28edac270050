#pragma once

#include <cstdint>
#include <random>

#include "nonpasch/rational.hpp"

namespace nonpasch {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Bounds for sampled rationals: numerators in [-max_num, max_num],
/// denominators in [1, max_den].
struct SampleBounds {
  std::int64_t max_num = 12;
  std::int64_t max_den = 4;
};

/// Deterministic random stream.
///
/// mt19937_64's output sequence is fixed by the standard, but the standard
/// distributions are not, so bounded draws use our own rejection sampler.
/// Two streams built from the same (master, index) pair produce identical
/// draws on every platform.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  Stream(std::uint64_t master, std::uint64_t index)
      : engine_(splitmix64(master ^ splitmix64(index + 0x5bd1e995ULL))) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// True with probability 1/n.
  bool one_in(std::int64_t n) { return uniform(0, n - 1) == 0; }

  Rational rational(const SampleBounds& bounds);

 private:
  std::mt19937_64 engine_;
};

}  // namespace nonpasch
