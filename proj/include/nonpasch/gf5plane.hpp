#pragma once

// The affine plane of order 5 with two betweenness relations: the
// midpoint relation (C = A + 4(B - A) puts A between B and C, and 4 = -1)
// and its complement among collinear distinct triples.

#include <array>
#include <string>
#include <vector>

namespace nonpasch::gf5plane {

/// Point of AG(2,5).
struct FPoint {
  int x = 0;
  int y = 0;

  /// 5x + y, in 0..24.
  int index() const noexcept { return 5 * x + y; }
  static FPoint from_index(int i) { return {i / 5, i % 5}; }

  friend bool operator==(const FPoint&, const FPoint&) = default;
  friend auto operator<=>(const FPoint&, const FPoint&) = default;
};

/// Line ax + by = c with the first nonzero of (a, b) equal to 1.
struct FLine {
  int a = 0;
  int b = 0;
  int c = 0;

  bool contains(const FPoint& p) const;
  std::array<FPoint, 5> points() const;

  friend bool operator==(const FLine&, const FLine&) = default;
  friend auto operator<=>(const FLine&, const FLine&) = default;
};

enum class Relation { Mid, Comp };

std::string_view to_string(Relation r);

/// All 25 points, in index order.
const std::vector<FPoint>& all_points();
/// All 30 lines, in lexicographic (a, b, c) order.
const std::vector<FLine>& all_lines();

/// Normalizes (a, b, c); throws Error{Degenerate} for a = b = 0.
FLine make_line(int a, int b, int c);

/// Throws Error{SamePoint}.
FLine line_through(const FPoint& p, const FPoint& q);

bool collinear(const FPoint& p, const FPoint& q, const FPoint& r);

/// x is between y and z: y + z = 2x with y, x, z distinct.
bool between_mid(const FPoint& y, const FPoint& x, const FPoint& z);

/// Distinct, collinear, and not between_mid.
bool between_comp(const FPoint& y, const FPoint& x, const FPoint& z);

bool between(Relation rel, const FPoint& y, const FPoint& x, const FPoint& z);

/// How many of the three points lie between the other two.
/// Throws Error{NotCollinear} (or Error{NotDistinct}).
int triple_between_count(Relation rel, const std::array<FPoint, 3>& triple);

}  // namespace nonpasch::gf5plane
