#include "nonpasch/angles.hpp"

#include <cmath>
#include <numbers>

#include "nonpasch/errors.hpp"

namespace nonpasch::angles {

namespace {

constexpr double kDegenerate = 1e-10;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  return {a[0] / n, a[1] / n, a[2] / n};
}

double vertex_angle(const Vec3& at, const Vec3& b, const Vec3& c) {
  const Vec3 u = cross(at, b);
  const Vec3 v = cross(at, c);
  return std::atan2(norm(cross(u, v)), dot(u, v));
}

double pentagon_angle(int k) { return 2.0 * std::numbers::pi * k / 5.0; }

}  // namespace

Vec3 position(const PrismPoint& p) {
  const double t = pentagon_angle(p.vertex.index());
  return {std::cos(t), std::sin(t), p.height.to_double()};
}

Vec3 plane_normal(const PrismLine& l) {
  if (l.is_vertical()) {
    const double t = pentagon_angle(l.as_vertical().vertex.index());
    return {-std::sin(t), std::cos(t), 0.0};
  }
  // z = alpha x + beta y through V0 = (1, 0) and V1 = (cos72, sin72).
  const auto& h = l.as_harmonic();
  const double alpha = h.h0.to_double();
  const double beta = (h.h1.to_double() - alpha * std::cos(pentagon_angle(1))) /
                      std::sin(pentagon_angle(1));
  return normalized({alpha, beta, -1.0});
}

AnglePair angle_pair(const PrismLine& l, const PrismLine& m) {
  if (l == m) throw Error(ErrorCode::SameLine, "angle of a line with itself");
  const double c = std::min(1.0, std::fabs(dot(plane_normal(l), plane_normal(m))));
  const double theta = std::acos(c);
  return {theta, std::numbers::pi - theta};
}

int side_of(const PrismPoint& p, const PrismLine& l) {
  if (l.is_vertical()) {
    // Side of the vertical plane through O and V_u is sign(sin(72(k - u))).
    const int offset = (p.vertex.index() - l.as_vertical().vertex.index() + 5) % 5;
    if (offset == 0) return 0;
    return offset <= 2 ? 1 : -1;
  }
  return (p.height - prism::height_at(l.as_harmonic(), p.vertex)).sign();
}

bool wedge_contains(const PrismPoint& p, const PrismLine& l, const PrismLine& m, WedgeChoice c) {
  if (l == m) throw Error(ErrorCode::DegeneratePair, "wedge of a line with itself");
  const int s = side_of(p, l) * side_of(p, m);
  if (s == 0) throw Error(ErrorCode::OnBoundary, "point lies on a leg of the angle");
  return c == WedgeChoice::Between ? s < 0 : s > 0;
}

Triangle triangle_of(const PrismLine& l1, const PrismLine& l2, const PrismLine& l3) {
  if (l1 == l2 || l2 == l3 || l1 == l3) {
    throw Error(ErrorCode::DegenerateVertices, "triangle needs three distinct lines");
  }
  auto p = prism::intersect(l1, l2);
  auto q = prism::intersect(l2, l3);
  auto r = prism::intersect(l1, l3);
  if (!p || !q || !r) throw Error(ErrorCode::NotIntersecting, "side lines do not pairwise meet");
  if (*p == *q && *q == *r) throw Error(ErrorCode::ConcurrentLines, "lines share a common point");
  if (*p == *q || *q == *r || *p == *r) {
    throw Error(ErrorCode::DegenerateVertices, "triangle vertices coincide");
  }
  return {l1, l2, l3, *p, *q, *r};
}

double spherical_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  // Van Oosterom-Strackee: tan(E/2) = |a.(b x c)| / (1 + a.b + b.c + c.a).
  const Vec3 ua = normalized(a);
  const Vec3 ub = normalized(b);
  const Vec3 uc = normalized(c);
  const double triple = std::fabs(dot(ua, cross(ub, uc)));
  const double denom = 1.0 + dot(ua, ub) + dot(ub, uc) + dot(uc, ua);
  double e = 2.0 * std::atan2(triple, denom);
  return e;
}

TriangleAngles triangle_angles(const Triangle& t) {
  for (const auto& [l, m] : {std::pair{&t.l1, &t.l2}, std::pair{&t.l2, &t.l3},
                             std::pair{&t.l1, &t.l3}}) {
    if (angle_pair(*l, *m).theta < kDegenerate) {
      throw Error(ErrorCode::NumericallyDegenerate, "two side planes nearly coincide");
    }
  }
  const Vec3 p = normalized(position(t.p));
  const Vec3 q = normalized(position(t.q));
  const Vec3 r = normalized(position(t.r));
  TriangleAngles out;
  out.at = {vertex_angle(p, q, r), vertex_angle(q, r, p), vertex_angle(r, p, q)};
  out.sum = out.at[0] + out.at[1] + out.at[2];
  out.excess = out.sum - std::numbers::pi;
  out.area = spherical_area(p, q, r);
  return out;
}

double triangle_angle_sum(const Triangle& t) { return triangle_angles(t).sum; }

bool triangle_interior_contains(const PrismPoint& x, const Triangle& t, const VertexWedges& c) {
  if (prism::incident(x, t.l1) || prism::incident(x, t.l2) || prism::incident(x, t.l3)) {
    throw Error(ErrorCode::OnBoundary, "point lies on a side line");
  }
  return wedge_contains(x, t.l1, t.l2, c.at_p) && wedge_contains(x, t.l2, t.l3, c.at_q) &&
         wedge_contains(x, t.l1, t.l3, c.at_r);
}

}  // namespace nonpasch::angles
