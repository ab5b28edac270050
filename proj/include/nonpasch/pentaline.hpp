#pragma once

// The five-point line: the vertices A..E of a regular pentagon, where the
// point between two others is the apex of the isosceles triangle they span.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nonpasch::pentaline {

[[noreturn]] void throw_bad_vertex(int index);

/// Pentagon vertex, indices 0..4 = A..E in cyclic order.
class Vertex {
 public:
  constexpr Vertex() = default;
  /// Throws Error{NotOnModel} outside 0..4.
  explicit constexpr Vertex(int index) : index_(index) {
    if (index < 0 || index > 4) throw_bad_vertex(index);
  }

  constexpr int index() const noexcept { return index_; }
  char letter() const noexcept { return static_cast<char>('A' + index_); }

  friend constexpr bool operator==(Vertex, Vertex) = default;
  friend constexpr auto operator<=>(Vertex, Vertex) = default;

 private:
  int index_ = 0;
};

inline constexpr Vertex A{0};
inline constexpr Vertex B{1};
inline constexpr Vertex C{2};
inline constexpr Vertex D{3};
inline constexpr Vertex E{4};

std::array<Vertex, 5> all_vertices();

/// Cyclic distance on the pentagon: 1 (an edge) or 2 (a diagonal); 0 for equal.
int cyclic_distance(Vertex u, Vertex v);

/// Parses "A".."E"; throws ParseError otherwise.
Vertex parse_vertex(const std::string& text);

enum class SegmentClass { Small, Large };

std::string_view to_string(SegmentClass c);

/// Closed segment of the five-point line. The closed point set always has
/// three elements: both ends and the apex.
struct Segment5 {
  Vertex end1;
  Vertex end2;
  Vertex apex;
  SegmentClass cls = SegmentClass::Small;

  /// {end1, apex, end2}.
  std::array<Vertex, 3> closed_set() const { return {end1, apex, end2}; }
  bool contains(Vertex v) const { return v == end1 || v == end2 || v == apex; }
  bool has_endpoint(Vertex v) const { return v == end1 || v == end2; }

  /// Segments are unordered in their ends.
  friend bool operator==(const Segment5& s, const Segment5& t);
};

/// Element of GF(3); Small segments have length 1, Large ones 2.
struct Gf3Length {
  int value = 0;

  friend Gf3Length operator+(Gf3Length x, Gf3Length y) { return {(x.value + y.value) % 3}; }
  friend bool operator==(Gf3Length, Gf3Length) = default;
};

/// The vertex of {i, j, k} whose two chords to the others are equal.
/// Throws Error{NotDistinct} unless i, j, k are pairwise distinct.
Vertex apex_of(Vertex i, Vertex j, Vertex k);

/// (x y z): y lies between x and z. False on repeated points.
bool between5(Vertex x, Vertex y, Vertex z);

/// Throws Error{Degenerate} when i == j.
Segment5 closed_segment(Vertex i, Vertex j);

/// All ten closed segments, in lexicographic order of (end1, end2).
std::vector<Segment5> all_segments();

/// Union of two segments meeting exactly in a common endpoint: the segment
/// spanned by the two free ends.
///
/// Throws Error{OverlappingSegments} if the closed sets share more than one
/// point, Error{NoCommonEndpoint} if they share none or the shared point is
/// not an endpoint of both.
Segment5 union_segments(const Segment5& s, const Segment5& t);

Gf3Length segment_length(const Segment5& s);

bool congruent(const Segment5& s, const Segment5& t);

/// Number of closed segments of class `c` with `p` as an endpoint.
int layoff_count(Vertex p, SegmentClass c);

/// Assignments (small, large) of GF(3) lengths that are additive on every
/// valid union, in lexicographic order. The zero assignment is included.
std::vector<std::pair<Gf3Length, Gf3Length>> additive_length_assignments();

/// Counts total orders of {0..n-1} that induce `between` exactly, i.e.
/// between(x,y,z) <=> x<y<z or z<y<x for every triple of distinct points.
int count_inducing_orders(int n, const std::function<bool(int, int, int)>& between);

/// Counts orders of `points` in which each listed triple (x, y, z) has y
/// strictly between x and z.
int count_orders_satisfying(const std::vector<int>& points,
                            const std::vector<std::array<int, 3>>& triples);

struct OrderabilityReport {
  int orders_searched = 0;      // 120
  int inducing_orders = 0;
  int restricted_searched = 0;  // 24 orders of {A, B, C, E}
  int restricted_satisfying = 0;
  std::vector<std::array<Vertex, 3>> restricted_triples;  // (ABC), (ACE), (EAB)
};

/// The betweenness of the five-point line does not come from any linear
/// order; the report carries both the full and the restricted search.
OrderabilityReport no_linear_order_witness();

// Failures of the classical theorems, as concrete witnesses.

/// Collinear triple whose three open segments are pairwise disjoint, and a
/// point of one of them missing the other two.
struct DegeneratePaschWitness {
  std::array<Vertex, 3> triple;
  Vertex crossing;
};
DegeneratePaschWitness degenerate_pasch_failure();

/// (ABC) and (ACE) hold, (ABE) fails and (EAB) holds instead.
struct FourPointWitness {
  Vertex a, b, c, d;
};
FourPointWitness four_point_failure();

/// "Same side of origin" is not transitive: x~y, y~z but x, z opposite.
struct HalfLineWitness {
  Vertex origin, x, y, z;
};
HalfLineWitness half_line_failure();

bool same_side(Vertex origin, Vertex x, Vertex y);
bool opposite_sides(Vertex origin, Vertex x, Vertex y);

/// A partition of the five points, as a bitmask of the first part.
struct Partition {
  std::uint8_t mask = 0;
  std::vector<Vertex> first() const;
  std::vector<Vertex> second() const;
};

/// True if no point of either part lies between two points of the other.
bool is_cut(const Partition& p);

/// Every partition with both parts nonempty satisfying `is_cut`.
std::vector<Partition> dedekind_cuts();

/// Closed set of `s` is a strict subset of the closed set of `t`.
bool strictly_contains(const Segment5& t, const Segment5& s);

/// A pair of segments of the opposite class whose closed sets cover `s`.
std::optional<std::pair<Segment5, Segment5>> archimedes_cover(const Segment5& s);

}  // namespace nonpasch::pentaline
