#pragma once

// Hand-rolled generators for property tests. They draw from their own
// engine so test inputs do not depend on the library's sampler.

#include <cstdint>
#include <random>

#include "nonpasch/gf5plane.hpp"
#include "nonpasch/prism.hpp"
#include "nonpasch/punctured.hpp"
#include "nonpasch/qs5.hpp"

namespace testing_support {

using nonpasch::BigInt;
using nonpasch::Qs5;
using nonpasch::Rational;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Rational rational(std::int64_t max_num = 20, std::int64_t max_den = 6) {
    return Rational(BigInt(integer(-max_num, max_num)), BigInt(integer(1, max_den)));
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  Qs5 qs5() { return {rational(), rational()}; }

  Qs5 nonzero_qs5() {
    for (;;) {
      Qs5 x = qs5();
      if (!x.is_zero()) return x;
    }
  }

  nonpasch::pentaline::Vertex vertex() {
    return nonpasch::pentaline::Vertex(static_cast<int>(integer(0, 4)));
  }

  nonpasch::prism::PrismPoint prism_point() { return {vertex(), qs5()}; }

  nonpasch::prism::PrismLine harmonic() { return nonpasch::prism::Harmonic{qs5(), qs5()}; }

  nonpasch::prism::PrismLine prism_line() {
    if (integer(0, 3) == 0) return nonpasch::prism::Vertical{vertex()};
    return harmonic();
  }

  nonpasch::punctured::QPoint qpoint() {
    for (;;) {
      Rational x = rational();
      Rational y = rational();
      if (!x.is_zero() || !y.is_zero()) return {x, y};
    }
  }

  nonpasch::gf5plane::FPoint fpoint() {
    return nonpasch::gf5plane::FPoint::from_index(static_cast<int>(integer(0, 24)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
