#pragma once

// The prism model: points on the five vertical lines a..e over the pentagon
// vertices, lines are those verticals together with the traces of the
// non-vertical planes through the pentagon centre O ("harmonic" lines).
//
// A harmonic line is stored by its heights over A and B. With the pentagon
// embedded as V_k = (cos 72k, sin 72k), the height of the plane z = ax + by
// over V_k satisfies h(k+2) = phi' h(k+1) - h(k) with phi' = 2cos72, so the
// two heights determine the other three and the sequence is 5-periodic.

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "nonpasch/pentaline.hpp"
#include "nonpasch/qs5.hpp"
#include "nonpasch/random.hpp"

namespace nonpasch::prism {

using pentaline::Vertex;

struct PrismPoint {
  Vertex vertex;
  Qs5 height;

  friend bool operator==(const PrismPoint&, const PrismPoint&) = default;
};

struct Vertical {
  Vertex vertex;
  friend bool operator==(const Vertical&, const Vertical&) = default;
};

struct Harmonic {
  Qs5 h0;
  Qs5 h1;
  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

class PrismLine {
 public:
  PrismLine(Vertical v) : repr_(v) {}          // NOLINT(google-explicit-constructor)
  PrismLine(Harmonic h) : repr_(std::move(h)) {}  // NOLINT(google-explicit-constructor)

  static PrismLine vertical(Vertex v) { return Vertical{v}; }
  static PrismLine harmonic(Qs5 h0, Qs5 h1) { return Harmonic{std::move(h0), std::move(h1)}; }

  bool is_vertical() const noexcept { return std::holds_alternative<Vertical>(repr_); }
  bool is_harmonic() const noexcept { return !is_vertical(); }
  /// Throws Error{WrongVariant}.
  const Vertical& as_vertical() const;
  /// Throws Error{WrongVariant}.
  const Harmonic& as_harmonic() const;

  friend bool operator==(const PrismLine&, const PrismLine&) = default;

 private:
  std::variant<Vertical, Harmonic> repr_;
};

/// The line through the pentagon itself, all heights zero.
PrismLine base_line();

/// Rows (p_k, q_k) with h_k = p_k h0 + q_k h1:
/// (1,0), (0,1), (-1,phi'), (-phi',-phi'), (phi',-1).
const std::array<std::array<Qs5, 2>, 5>& coefficient_rows();

/// Heights over A..E. Throws Error{WrongVariant} for vertical lines.
std::array<Qs5, 5> heights_of(const PrismLine& l);
Qs5 height_at(const Harmonic& h, Vertex v);

/// Runs the recurrence `steps` times from (h0, h1) and returns the last
/// value; steps = 5 reproduces h0.
Qs5 run_recurrence(const Qs5& h0, const Qs5& h1, int steps);

bool incident(const PrismPoint& p, const PrismLine& l);

/// Throws Error{SamePoint}.
PrismLine line_through(const PrismPoint& p, const PrismPoint& q);

/// Throws Error{SameLine}.
std::optional<PrismPoint> intersect(const PrismLine& l, const PrismLine& m);

/// Number of vertices where two harmonic lines have equal height.
int agreement_count(const Harmonic& l, const Harmonic& m);

bool collinear(const PrismPoint& p, const PrismPoint& q, const PrismPoint& r);

/// (p1 p2 p3) on the common line: height order on a vertical, the
/// five-point-line betweenness on a harmonic line.
/// Throws Error{NotDistinct} or Error{NotCollinear}.
bool between3(const PrismPoint& p1, const PrismPoint& p2, const PrismPoint& p3);

/// Relation form of between3: false instead of throwing.
bool between(const PrismPoint& p1, const PrismPoint& p2, const PrismPoint& p3);

struct Transversal {
  PrismLine line;
  std::array<PrismPoint, 3> points;  // on x, y, z respectively
};

/// A fourth line meeting x, y, z in three distinct points.
///
/// Two harmonic inputs must meet; vertical pairs are accepted.
/// Throws Error{SameLine} for repeated inputs and
/// Error{NotPairwiseIntersecting} for disjoint harmonic pairs.
Transversal transversal_for(const PrismLine& x, const PrismLine& y, const PrismLine& z);

/// Triangle refuting the weak Pasch axiom: the line d crosses the side PQ
/// at its only inner point and meets the other two side lines outside the
/// closed sides.
struct PaschStarWitness {
  PrismLine l1, l2, l3;
  PrismPoint p, q, r;
  PrismLine d;
  PrismPoint d_on_pq;
  PrismPoint x_d;  // d meets l1 (line PR)
  PrismPoint z_d;  // d meets l3 (line QR)
  std::array<Vertex, 3> closed_pq, closed_qr, closed_pr;
};

PaschStarWitness pasch_star_witness();
bool verify(const PaschStarWitness& w);

struct UniqueParallel {
  PrismLine line;
};

struct FinitelyManyMeet {
  std::vector<PrismLine> meeting;
  std::vector<PrismLine> sample_parallels;
};

using ParallelClass = std::variant<UniqueParallel, FinitelyManyMeet>;

/// Lines through X that miss l. Throws Error{IncidentPoint}.
ParallelClass parallels_through(const PrismPoint& x, const PrismLine& l,
                                std::size_t sample_count = 100);

Qs5 sample_qs5(Stream& s, const SampleBounds& bounds = {});
PrismPoint sample_point(Stream& s, const SampleBounds& bounds = {});
PrismLine sample_line(Stream& s, const SampleBounds& bounds = {});

}  // namespace nonpasch::prism
