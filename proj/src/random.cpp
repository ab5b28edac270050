#include "nonpasch/random.hpp"

#include <limits>

namespace nonpasch {

std::int64_t Stream::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(next());
  }
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % range);
}

Rational Stream::rational(const SampleBounds& bounds) {
  const std::int64_t num = uniform(-bounds.max_num, bounds.max_num);
  const std::int64_t den = uniform(1, bounds.max_den);
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace nonpasch
