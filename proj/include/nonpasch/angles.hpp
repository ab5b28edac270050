#pragma once

// Angles of the prism model. Every model line spans a plane through the
// pentagon centre O; two such planes cut space into two pairs of opposite
// wedges, and the dihedral angles of the wedges are the angle measures.
// Membership in a wedge is decided exactly; only the measures are floats.

#include <array>

#include "nonpasch/prism.hpp"

namespace nonpasch::angles {

using prism::PrismLine;
using prism::PrismPoint;

using Vec3 = std::array<double, 3>;

/// (cos 72k, sin 72k, height) for a point over vertex k.
Vec3 position(const PrismPoint& p);

/// Unit normal of the plane through O spanned by the line. Sign is not
/// canonical beyond: harmonic normals point downwards (z < 0).
Vec3 plane_normal(const PrismLine& l);

struct AnglePair {
  double theta = 0;       // 0 < theta <= pi/2
  double complement = 0;  // pi - theta
};

/// Throws Error{SameLine}.
AnglePair angle_pair(const PrismLine& l, const PrismLine& m);

enum class WedgeChoice { Between, Outside };

/// Exact side (+1 / -1) of the plane of `l` containing p, 0 if p is on l.
int side_of(const PrismPoint& p, const PrismLine& l);

/// Whether p lies in the chosen opposite-wedge pair of l and m.
/// Throws Error{DegeneratePair} if l == m, Error{OnBoundary} if p is on a leg.
bool wedge_contains(const PrismPoint& p, const PrismLine& l, const PrismLine& m, WedgeChoice c);

/// Vertices: p = l1 ∩ l2, q = l2 ∩ l3, r = l1 ∩ l3.
struct Triangle {
  PrismLine l1, l2, l3;
  PrismPoint p, q, r;
};

/// Throws Error{NotIntersecting}, Error{ConcurrentLines} or
/// Error{DegenerateVertices}.
Triangle triangle_of(const PrismLine& l1, const PrismLine& l2, const PrismLine& l3);

struct TriangleAngles {
  std::array<double, 3> at;  // at p, q, r
  double sum = 0;
  double excess = 0;  // sum - pi
  double area = 0;    // spherical area, computed independently of the angles
};

/// Angles of the spherical triangle obtained by projecting p, q, r onto the
/// unit sphere around O. Throws Error{NumericallyDegenerate} when two of the
/// planes are within 1e-10 rad of each other.
TriangleAngles triangle_angles(const Triangle& t);
double triangle_angle_sum(const Triangle& t);

/// Area of the spherical triangle with the given (not necessarily unit)
/// vertex directions.
double spherical_area(const Vec3& a, const Vec3& b, const Vec3& c);

/// Wedge choices at p (l1,l2), q (l2,l3) and r (l1,l3).
struct VertexWedges {
  WedgeChoice at_p = WedgeChoice::Between;
  WedgeChoice at_q = WedgeChoice::Between;
  WedgeChoice at_r = WedgeChoice::Between;
};

/// Throws Error{OnBoundary} if x lies on one of the three lines.
bool triangle_interior_contains(const PrismPoint& x, const Triangle& t, const VertexWedges& c);

}  // namespace nonpasch::angles
