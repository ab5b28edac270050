#pragma once

#include <compare>
#include <string>

#include "nonpasch/rational.hpp"

namespace nonpasch {

/// Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
///
/// Both components are canonical rationals, so equality is componentwise.
/// The total order is the one inherited from the reals and is decided
/// exactly by `sign()`.
class Qs5 {
 public:
  Qs5() = default;
  Qs5(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Qs5(std::int64_t a) : a_(a) {}         // NOLINT(google-explicit-constructor)
  Qs5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Qs5 sqrt5() { return {Rational(0), Rational(1)}; }
  /// 2cos(72 deg) = (sqrt5 - 1)/2, the pentagon recurrence coefficient.
  static Qs5 phi_prime() { return {Rational(-1, 2), Rational(1, 2)}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  /// Sign of the real number a + b*sqrt5, decided exactly.
  int sign() const;

  Qs5 operator-() const { return {-a_, -b_}; }
  Qs5& operator+=(const Qs5& o);
  Qs5& operator-=(const Qs5& o);
  Qs5& operator*=(const Qs5& o);
  /// Throws Error{DivisionByZero} when `o` is zero.
  Qs5& operator/=(const Qs5& o);

  friend Qs5 operator+(Qs5 x, const Qs5& y) { return x += y; }
  friend Qs5 operator-(Qs5 x, const Qs5& y) { return x -= y; }
  friend Qs5 operator*(Qs5 x, const Qs5& y) { return x *= y; }
  friend Qs5 operator/(Qs5 x, const Qs5& y) { return x /= y; }

  /// Galois conjugate a - b*sqrt5.
  Qs5 conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5b^2 = x * conjugate(x).
  Rational norm() const;
  Qs5 inverse() const;

  friend bool operator==(const Qs5& x, const Qs5& y) = default;
  friend std::strong_ordering operator<=>(const Qs5& x, const Qs5& y);

  /// Float evaluation, within a few ulp of the exact value. Cancellation
  /// between the two terms is avoided by going through the conjugate.
  /// Throws Error{Overflow} for values outside the double range.
  double to_double() const;

  /// Canonical literal: `3/2`, `-1/2+1/2*s5`, `-1*s5`.
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

int sign(const Qs5& x);
double to_real(const Qs5& x);

}  // namespace nonpasch
