#include <algorithm>
#include <stdexcept>

#include "engine/generic.hpp"
#include "engine/models.hpp"
#include "nonpasch/pentaline.hpp"

namespace nonpasch::engine::detail {

namespace {

using pentaline::Vertex;

/// The five-point line is its own (only) line.
struct TheLine {
  friend bool operator==(TheLine, TheLine) = default;
};

class PentalineModel {
 public:
  using Point = Vertex;
  using Line = TheLine;

  ModelId id() const { return ModelId::Pentaline; }
  Capabilities capabilities() const { return {true, true, true, true}; }

  std::optional<std::string> unsupported(AxiomId a) const {
    switch (a) {
      case AxiomId::I1:
      case AxiomId::I2:
      case AxiomId::I3:
      case AxiomId::I4:
      case AxiomId::B4:
      case AxiomId::B4star:
      case AxiomId::T5:
        return "the five-point line is a single line; " + std::string(to_string(a)) +
               " is a plane statement";
      default:
        return std::nullopt;
    }
  }

  std::vector<AxiomId> default_suite() const {
    return {AxiomId::B1, AxiomId::B2, AxiomId::B3,    AxiomId::T1,      AxiomId::T2,
            AxiomId::T3, AxiomId::T4, AxiomId::Arch5, AxiomId::Cantor5, AxiomId::Dedekind5};
  }

  Point parse_point(const std::string& s) const { return pentaline::parse_vertex(s); }
  Line parse_line(const std::string& s) const {
    if (s != "pentaline") throw ParseError(s, 0, "expected 'pentaline'");
    return {};
  }
  std::string point_literal(Vertex v) const { return std::string(1, v.letter()); }
  std::string line_literal(TheLine) const { return "pentaline"; }

  std::optional<Instance<Point, Line>> canonical_counterexample(AxiomId a) const {
    switch (a) {
      case AxiomId::T2: {
        const auto w = pentaline::degenerate_pasch_failure();
        return Instance<Point, Line>{{w.triple[0], w.triple[1], w.triple[2], w.crossing}, {}};
      }
      case AxiomId::T3: {
        const auto w = pentaline::four_point_failure();
        return Instance<Point, Line>{{w.a, w.b, w.c, w.d}, {}};
      }
      case AxiomId::T4: {
        const auto w = pentaline::half_line_failure();
        return Instance<Point, Line>{{w.origin, w.x, w.y, w.z}, {}};
      }
      default:
        return std::nullopt;
    }
  }

  std::vector<Vertex> points() const {
    const auto v = pentaline::all_vertices();
    return {v.begin(), v.end()};
  }
  std::vector<TheLine> lines() const { return {TheLine{}}; }

  // Special axioms. Instances are vertex lists: the ends of one segment
  // (Arch5), the ends of two segments (Cantor5), or the first part of a
  // partition (Dedekind5).
  bool is_special(AxiomId a) const {
    return a == AxiomId::Arch5 || a == AxiomId::Cantor5 || a == AxiomId::Dedekind5;
  }

  void for_each_special(AxiomId a, const std::function<bool(const std::vector<Vertex>&)>& fn) const {
    const auto segments = pentaline::all_segments();
    if (a == AxiomId::Arch5) {
      for (const auto& s : segments) {
        if (!fn({s.end1, s.end2})) return;
      }
    } else if (a == AxiomId::Cantor5) {
      for (const auto& s : segments) {
        for (const auto& t : segments) {
          if (!fn({s.end1, s.end2, t.end1, t.end2})) return;
        }
      }
    } else {
      for (int mask = 1; mask < 31; ++mask) {
        if (!fn(pentaline::Partition{static_cast<std::uint8_t>(mask)}.first())) return;
      }
    }
  }

  std::vector<Vertex> sample_special(AxiomId a, Stream& s) const {
    const auto segments = pentaline::all_segments();
    auto pick = [&] { return segments[static_cast<std::size_t>(s.uniform(0, 9))]; };
    if (a == AxiomId::Arch5) {
      const auto seg = pick();
      return {seg.end1, seg.end2};
    }
    if (a == AxiomId::Cantor5) {
      const auto x = pick();
      const auto y = pick();
      return {x.end1, x.end2, y.end1, y.end2};
    }
    return pentaline::Partition{static_cast<std::uint8_t>(s.uniform(1, 30))}.first();
  }

  std::optional<std::string> special_violation(AxiomId a, const std::vector<Vertex>& pts) const {
    using pentaline::SegmentClass;
    if (a == AxiomId::Arch5) {
      const auto seg = pentaline::closed_segment(pts[0], pts[1]);
      if (seg.cls != SegmentClass::Large) return std::nullopt;
      const auto cover = pentaline::archimedes_cover(seg);
      const auto closed = seg.closed_set();
      auto covered = [&](Vertex v) { return cover->first.contains(v) || cover->second.contains(v); };
      if (!cover || cover->first.cls != SegmentClass::Small ||
          cover->second.cls != SegmentClass::Small ||
          !std::all_of(closed.begin(), closed.end(), covered)) {
        return "large segment " + point_literal(pts[0]) + point_literal(pts[1]) +
               " is not covered by two small ones";
      }
      return std::nullopt;
    }
    if (a == AxiomId::Cantor5) {
      const auto outer = pentaline::closed_segment(pts[0], pts[1]);
      const auto inner = pentaline::closed_segment(pts[2], pts[3]);
      if (pentaline::strictly_contains(outer, inner)) {
        return "segment " + point_literal(pts[0]) + point_literal(pts[1]) + " strictly contains " +
               point_literal(pts[2]) + point_literal(pts[3]);
      }
      return std::nullopt;
    }
    pentaline::Partition part;
    for (Vertex v : pts) part.mask = static_cast<std::uint8_t>(part.mask | (1u << v.index()));
    if (part.mask == 0 || part.mask == 31) return std::nullopt;
    if (pentaline::is_cut(part)) {
      std::string first;
      for (Vertex v : pts) first += v.letter();
      return "partition {" + first + "} is a Dedekind cut";
    }
    return std::nullopt;
  }

  // Sampling.
  Vertex sample_point(Stream& s) const { return Vertex(static_cast<int>(s.uniform(0, 4))); }
  TheLine sample_line(Stream&) const { return {}; }
  TheLine sample_line_through(Vertex, Stream&) const { return {}; }

  std::vector<Vertex> sample_points_on(TheLine, int n, Stream& s) const {
    std::vector<Vertex> all = points();
    for (int i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(s.uniform(i, 4));
      std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    all.resize(static_cast<std::size_t>(n));
    return all;
  }

  Vertex sample_point_off(TheLine, Stream&) const {
    throw std::logic_error("every point lies on the five-point line");
  }
  std::array<TheLine, 3> sample_intersecting_triple(Stream&) const {
    throw std::logic_error("the five-point line has one line");
  }
  std::optional<Vertex> sample_between(Vertex a, Vertex b, Stream&) const { return t1_witness(a, b); }
  std::optional<Vertex> sample_opposite(TheLine, Vertex, Stream&) const { return std::nullopt; }

  // Primitives.
  bool incident(Vertex, TheLine) const { return true; }
  bool collinear(Vertex, Vertex, Vertex) const { return true; }
  bool between(Vertex x, Vertex y, Vertex z) const { return pentaline::between5(x, y, z); }
  std::optional<TheLine> line_through(Vertex, Vertex) const { return TheLine{}; }
  std::optional<Vertex> intersect(TheLine, TheLine) const { return std::nullopt; }
  int lines_through_count(Vertex, Vertex) const { return 1; }
  std::optional<std::array<Vertex, 2>> two_points(TheLine) const {
    return std::array{pentaline::A, pentaline::B};
  }
  std::optional<std::array<Vertex, 3>> noncollinear_triple() const { return std::nullopt; }
  std::optional<std::pair<TheLine, std::array<Vertex, 3>>> transversal(TheLine, TheLine,
                                                                       TheLine) const {
    return std::nullopt;
  }

  std::optional<Vertex> b2_witness(Vertex a, Vertex b) const {
    for (Vertex k : pentaline::all_vertices()) {
      if (pentaline::between5(a, b, k)) return k;
    }
    return std::nullopt;
  }

  std::optional<Vertex> t1_witness(Vertex a, Vertex b) const {
    for (Vertex k : pentaline::all_vertices()) {
      if (pentaline::between5(a, k, b)) return k;
    }
    return std::nullopt;
  }
};

}  // namespace

StructureHandle make_pentaline() {
  return std::make_shared<ModelStructure<PentalineModel>>(PentalineModel{});
}

std::vector<AxiomId> plane_suite() {
  return {AxiomId::I1, AxiomId::I2, AxiomId::I3, AxiomId::I4,     AxiomId::B1,
          AxiomId::B2, AxiomId::B3, AxiomId::B4, AxiomId::B4star, AxiomId::T1,
          AxiomId::T2, AxiomId::T3, AxiomId::T4, AxiomId::T5};
}

}  // namespace nonpasch::engine::detail
