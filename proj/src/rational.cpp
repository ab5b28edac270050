#include "nonpasch/rational.hpp"

#include <cmath>
#include <limits>

#include "nonpasch/errors.hpp"

namespace nonpasch {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Rational::to_double() const {
  if (num_.is_zero()) return 0.0;
  BigInt n = boost::multiprecision::abs(num_);
  BigInt d = den_;
  // Scale so that the integer quotient carries 64-65 significant bits; the
  // truncated remainder is then far below half an ulp of the result.
  long shift = static_cast<long>(boost::multiprecision::msb(n)) -
               static_cast<long>(boost::multiprecision::msb(d)) - 64;
  if (shift > 0) {
    d <<= shift;
  } else {
    n <<= -shift;
  }
  BigInt q = n / d;
  double mantissa = q.convert_to<double>();
  if (shift > std::numeric_limits<int>::max() || shift < std::numeric_limits<int>::min()) {
    throw Error(ErrorCode::Overflow, "rational exponent out of range: " + str());
  }
  double v = std::ldexp(mantissa, static_cast<int>(shift));
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::Overflow, "rational does not fit a double");
  }
  return num_.sign() < 0 ? -v : v;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace nonpasch
