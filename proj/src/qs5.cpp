#include "nonpasch/qs5.hpp"

#include <cmath>

#include "nonpasch/errors.hpp"

namespace nonpasch {

namespace {

const double kSqrt5 = std::sqrt(5.0);

}  // namespace

int Qs5::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Mixed signs: compare a^2 against 5b^2.
  const Rational a2 = a_ * a_;
  const Rational b2x5 = Rational(5) * b_ * b_;
  if (sa > 0) return (a2 <=> b2x5) > 0 ? 1 : ((a2 <=> b2x5) < 0 ? -1 : 0);
  return (b2x5 <=> a2) > 0 ? 1 : ((b2x5 <=> a2) < 0 ? -1 : 0);
}

Qs5& Qs5::operator+=(const Qs5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Qs5& Qs5::operator-=(const Qs5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Qs5& Qs5::operator*=(const Qs5& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Rational Qs5::norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

Qs5 Qs5::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(sqrt5)");
  }
  // sqrt5 is irrational, so the norm vanishes only at zero.
  const Rational n = norm();
  return {a_ / n, -b_ / n};
}

Qs5& Qs5::operator/=(const Qs5& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "division by zero in Q(sqrt5)");
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Qs5& x, const Qs5& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Qs5::to_double() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa * sb >= 0) {
    return a_.to_double() + b_.to_double() * kSqrt5;
  }
  // a + b*sqrt5 = (a^2 - 5b^2) / (a - b*sqrt5); the denominator's two terms
  // share a sign, the numerator is exact.
  const double denom = a_.to_double() - b_.to_double() * kSqrt5;
  return norm().to_double() / denom;
}

std::string Qs5::str() const {
  if (b_.is_zero()) return a_.str();
  if (a_.is_zero()) return b_.str() + "*s5";
  if (b_.sign() < 0) return a_.str() + "-" + (-b_).str() + "*s5";
  return a_.str() + "+" + b_.str() + "*s5";
}

int sign(const Qs5& x) { return x.sign(); }

double to_real(const Qs5& x) { return x.to_double(); }

}  // namespace nonpasch
