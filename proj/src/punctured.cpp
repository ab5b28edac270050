#include "nonpasch/punctured.hpp"

#include <stdexcept>
#include <vector>

#include "nonpasch/errors.hpp"

namespace nonpasch::punctured {

namespace {

BigInt lcm(const BigInt& x, const BigInt& y) { return x / boost::multiprecision::gcd(x, y) * y; }

}  // namespace

QPoint::QPoint(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.is_zero() && y_.is_zero()) {
    throw Error(ErrorCode::NotOnModel, "the origin is removed from the plane");
  }
}

QLine::QLine(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::Degenerate, "line with a = b = 0");
  const BigInt m = lcm(lcm(a.den(), b.den()), c.den());
  a_ = a.num() * (m / a.den());
  b_ = b.num() * (m / b.den());
  c_ = c.num() * (m / c.den());
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a_, b_), c_);
  g = boost::multiprecision::abs(g);
  a_ /= g;
  b_ /= g;
  c_ /= g;
  const int lead = a_.is_zero() ? b_.sign() : a_.sign();
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
}

QLine q_line_through(const QPoint& p, const QPoint& q) {
  if (p == q) throw Error(ErrorCode::SamePoint, "line through a single point");
  const Rational a = q.y() - p.y();
  const Rational b = p.x() - q.x();
  return QLine(a, b, a * p.x() + b * p.y());
}

bool q_incident(const QPoint& p, const QLine& l) {
  return Rational(l.a(), 1) * p.x() + Rational(l.b(), 1) * p.y() == Rational(l.c(), 1);
}

bool q_collinear(const QPoint& p, const QPoint& q, const QPoint& r) {
  return ((q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x())).is_zero();
}

bool q_between(const QPoint& p1, const QPoint& p2, const QPoint& p3) {
  if (p1 == p2 || p2 == p3 || p1 == p3) {
    throw Error(ErrorCode::NotDistinct, "betweenness of repeated points");
  }
  if (!q_collinear(p1, p2, p3)) throw Error(ErrorCode::NotCollinear, "points are not collinear");
  const Rational dx = p3.x() - p1.x();
  const Rational dy = p3.y() - p1.y();
  const Rational s = ((p2.x() - p1.x()) * dx + (p2.y() - p1.y()) * dy) / (dx * dx + dy * dy);
  return s.sign() > 0 && s < Rational(1);
}

bool q_between_rel(const QPoint& p1, const QPoint& p2, const QPoint& p3) {
  if (p1 == p2 || p2 == p3 || p1 == p3 || !q_collinear(p1, p2, p3)) return false;
  return q_between(p1, p2, p3);
}

std::optional<QPoint> q_intersect(const QLine& l, const QLine& m) {
  if (l == m) throw Error(ErrorCode::SameLine, "intersection of a line with itself");
  const BigInt det = l.a() * m.b() - m.a() * l.b();
  if (det.is_zero()) return std::nullopt;
  Rational x(l.c() * m.b() - m.c() * l.b(), det);
  Rational y(l.a() * m.c() - m.a() * l.c(), det);
  if (x.is_zero() && y.is_zero()) return std::nullopt;
  return QPoint(std::move(x), std::move(y));
}

std::optional<QPoint> point_at(const QLine& l, const Rational& t) {
  const Rational a(l.a(), 1), b(l.b(), 1), c(l.c(), 1);
  Rational x = b.is_zero() ? c / a : Rational(0);
  Rational y = b.is_zero() ? Rational(0) : c / b;
  x += t * b;
  y -= t * a;
  if (x.is_zero() && y.is_zero()) return std::nullopt;
  return QPoint(std::move(x), std::move(y));
}

std::pair<QPoint, QPoint> points_on(const QLine& l) {
  std::vector<QPoint> pts;
  for (std::int64_t t = 1; pts.size() < 2; ++t) {
    if (auto p = point_at(l, Rational(t))) pts.push_back(*p);
  }
  return {pts[0], pts[1]};
}

PaschWitness q_pasch_witness() {
  PaschWitness w{
      QPoint(0, 2),
      QPoint(-1, -1),
      QPoint(1, 1),
      QLine(1, 1, 0),
      QPoint(Rational(-1, 2), Rational(1, 2)),
  };
  if (!verify(w)) throw std::logic_error("q_pasch_witness failed verification");
  return w;
}

bool verify(const PaschWitness& w) {
  if (q_collinear(w.a, w.b, w.c)) return false;
  if (q_incident(w.a, w.line) || q_incident(w.b, w.line) || q_incident(w.c, w.line)) return false;
  if (!q_incident(w.d, w.line) || !q_between_rel(w.a, w.d, w.b)) return false;
  // The line must miss both other sides inside the model.
  for (const auto& [u, v] : {std::pair{&w.b, &w.c}, std::pair{&w.a, &w.c}}) {
    const QLine side = q_line_through(*u, *v);
    if (auto x = q_intersect(w.line, side); x && q_between_rel(*u, *x, *v)) return false;
  }
  return true;
}

QPoint sample_point(Stream& s, const SampleBounds& bounds) {
  for (;;) {
    Rational x = s.rational(bounds);
    Rational y = s.rational(bounds);
    if (!x.is_zero() || !y.is_zero()) return {std::move(x), std::move(y)};
  }
}

QLine sample_line(Stream& s, const SampleBounds& bounds) {
  for (;;) {
    Rational a = s.rational(bounds);
    Rational b = s.rational(bounds);
    // At least a quarter of the lines pass through the hole.
    Rational c = s.one_in(4) ? Rational(0) : s.rational(bounds);
    if (!a.is_zero() || !b.is_zero()) return {a, b, c};
  }
}

}  // namespace nonpasch::punctured
