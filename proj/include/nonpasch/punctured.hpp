#pragma once

// The rational plane with the origin removed. Lines keep their Euclidean
// order, but two lines through the hole no longer meet.

#include <optional>

#include "nonpasch/random.hpp"
#include "nonpasch/rational.hpp"

namespace nonpasch::punctured {

/// Rational point other than the origin.
class QPoint {
 public:
  /// Throws Error{NotOnModel} for the origin.
  QPoint(Rational x, Rational y);

  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }

  friend bool operator==(const QPoint&, const QPoint&) = default;

 private:
  Rational x_;
  Rational y_;
};

/// ax + by = c with integer coefficients, gcd 1, first nonzero of (a, b)
/// positive.
class QLine {
 public:
  /// Normalizes; throws Error{Degenerate} if a = b = 0.
  QLine(const Rational& a, const Rational& b, const Rational& c);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }

  bool passes_through_hole() const { return c_.is_zero(); }

  friend bool operator==(const QLine&, const QLine&) = default;

 private:
  BigInt a_, b_, c_;
};

/// Throws Error{SamePoint}.
QLine q_line_through(const QPoint& p, const QPoint& q);
bool q_incident(const QPoint& p, const QLine& l);
bool q_collinear(const QPoint& p, const QPoint& q, const QPoint& r);

/// Euclidean betweenness by parameter order along the common line.
/// Throws Error{NotDistinct} or Error{NotCollinear}.
bool q_between(const QPoint& p1, const QPoint& p2, const QPoint& p3);
/// Relation form: false instead of throwing.
bool q_between_rel(const QPoint& p1, const QPoint& p2, const QPoint& p3);

/// None for parallel lines and for lines whose only common point is the
/// removed origin. Throws Error{SameLine}.
std::optional<QPoint> q_intersect(const QLine& l, const QLine& m);

/// Two distinct model points on `l`, deterministic.
std::pair<QPoint, QPoint> points_on(const QLine& l);

/// Point at parameter t on `l`: base + t * direction, or nullopt at the hole.
std::optional<QPoint> point_at(const QLine& l, const Rational& t);

struct PaschWitness {
  QPoint a, b, c;
  QLine line;
  QPoint d;  // on line, strictly between a and b
};

/// Triangle A=(0,2), B=(-1,-1), C=(1,1) with the line x + y = 0 through
/// D = (-1/2, 1/2): parallel to AC, meets BC only at the hole.
PaschWitness q_pasch_witness();
bool verify(const PaschWitness& w);

QPoint sample_point(Stream& s, const SampleBounds& bounds = {});
QLine sample_line(Stream& s, const SampleBounds& bounds = {});

}  // namespace nonpasch::punctured
