#include "engine/generic.hpp"
#include "engine/models.hpp"
#include "nonpasch/literals.hpp"
#include "nonpasch/prism.hpp"

namespace nonpasch::engine::detail {

namespace {

using prism::PrismLine;
using prism::PrismPoint;
using pentaline::Vertex;

PrismPoint at_height(Vertex v, std::int64_t h) { return {v, Qs5(h)}; }

class PrismModel {
 public:
  using Point = PrismPoint;
  using Line = PrismLine;

  explicit PrismModel(SampleBounds bounds) : bounds_(bounds) {}

  ModelId id() const { return ModelId::Prism; }
  Capabilities capabilities() const { return {false, false, false, true}; }

  std::optional<std::string> unsupported(AxiomId a) const {
    if (a == AxiomId::Arch5 || a == AxiomId::Cantor5 || a == AxiomId::Dedekind5) {
      return std::string(to_string(a)) +
             " is stated for the five-point line; continuity on the vertical lines needs real "
             "heights, which exact Q(sqrt5) coordinates cannot witness";
    }
    return std::nullopt;
  }

  std::vector<AxiomId> default_suite() const { return plane_suite(); }

  Point parse_point(const std::string& s) const { return literals::parse_prism_point(s); }
  Line parse_line(const std::string& s) const { return literals::parse_prism_line(s); }
  std::string point_literal(const Point& p) const { return literals::format(p); }
  std::string line_literal(const Line& l) const { return literals::format(l); }

  std::optional<Instance<Point, Line>> canonical_counterexample(AxiomId a) const {
    using pentaline::A, pentaline::B, pentaline::C, pentaline::D, pentaline::E;
    switch (a) {
      case AxiomId::B4:
      case AxiomId::B4star: {
        const auto w = prism::pasch_star_witness();
        return Instance<Point, Line>{{w.p, w.q, w.r}, {w.d}};
      }
      // The base line is a copy of the five-point line.
      case AxiomId::T2:
        return Instance<Point, Line>{
            {at_height(A, 0), at_height(C, 0), at_height(D, 0), at_height(B, 0)}, {}};
      case AxiomId::T3:
        return Instance<Point, Line>{
            {at_height(A, 0), at_height(B, 0), at_height(C, 0), at_height(E, 0)}, {}};
      case AxiomId::T4:
        return Instance<Point, Line>{
            {at_height(A, 0), at_height(C, 0), at_height(B, 0), at_height(D, 0)}, {}};
      default:
        return std::nullopt;
    }
  }

  std::vector<Point> points() const { return {}; }
  std::vector<Line> lines() const { return {}; }

  bool is_special(AxiomId) const { return false; }
  void for_each_special(AxiomId, const std::function<bool(const std::vector<Point>&)>&) const {}
  std::vector<Point> sample_special(AxiomId, Stream&) const { return {}; }
  std::optional<std::string> special_violation(AxiomId, const std::vector<Point>&) const {
    return std::nullopt;
  }

  // Sampling.
  Point sample_point(Stream& s) const { return prism::sample_point(s, bounds_); }
  Line sample_line(Stream& s) const { return prism::sample_line(s, bounds_); }

  Line sample_line_through(const Point& p, Stream& s) const {
    if (s.one_in(4)) return prism::Vertical{p.vertex};
    const Vertex w((p.vertex.index() + static_cast<int>(s.uniform(1, 4))) % 5);
    return prism::line_through(p, {w, prism::sample_qs5(s, bounds_)});
  }

  std::vector<Point> sample_points_on(const Line& l, int n, Stream& s) const {
    std::vector<Point> out;
    if (l.is_vertical()) {
      while (static_cast<int>(out.size()) < n) {
        Point p{l.as_vertical().vertex, prism::sample_qs5(s, bounds_)};
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      }
      return out;
    }
    const auto heights = prism::heights_of(l);
    std::array<int, 5> order{0, 1, 2, 3, 4};
    for (int i = 0; i < n; ++i) {
      std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(s.uniform(i, 4))]);
      const int k = order[static_cast<std::size_t>(i)];
      out.push_back({Vertex(k), heights[static_cast<std::size_t>(k)]});
    }
    return out;
  }

  Point sample_point_off(const Line& l, Stream& s) const {
    for (;;) {
      Point p = sample_point(s);
      if (!prism::incident(p, l)) return p;
    }
  }

  std::optional<Point> sample_between(const Point& a, const Point& b, Stream& s) const {
    if (a.vertex != b.vertex) return t1_witness(a, b);
    const std::int64_t den = s.uniform(2, 8);
    const Qs5 t(Rational(BigInt(s.uniform(1, den - 1)), BigInt(den)));
    return Point{a.vertex, a.height + t * (b.height - a.height)};
  }

  std::optional<Point> sample_opposite(const Line& l, const Point& x, Stream& s) const {
    return beyond_line(*this, l, x, s);
  }

  std::array<Line, 3> sample_intersecting_triple(Stream& s) const {
    return triangle_or_pencil(*this, s);
  }

  // Primitives.
  bool incident(const Point& p, const Line& l) const { return prism::incident(p, l); }
  bool collinear(const Point& p, const Point& q, const Point& r) const {
    return prism::collinear(p, q, r);
  }
  bool between(const Point& x, const Point& y, const Point& z) const {
    return prism::between(x, y, z);
  }
  std::optional<Line> line_through(const Point& p, const Point& q) const {
    if (p == q) return std::nullopt;
    return prism::line_through(p, q);
  }
  std::optional<Point> intersect(const Line& l, const Line& m) const {
    return prism::intersect(l, m);
  }

  /// A harmonic line has one point per vertical, so two points over the
  /// same vertex lie on the vertical only; otherwise the two height
  /// equations have a nonzero determinant and a unique solution.
  int lines_through_count(const Point& p, const Point& q) const {
    if (p.vertex == q.vertex) return 1;
    const auto& ri = prism::coefficient_rows()[static_cast<std::size_t>(p.vertex.index())];
    const auto& rj = prism::coefficient_rows()[static_cast<std::size_t>(q.vertex.index())];
    return (ri[0] * rj[1] - rj[0] * ri[1]).sign() != 0 ? 1 : 2;
  }

  std::optional<std::array<Point, 2>> two_points(const Line& l) const {
    if (l.is_vertical()) {
      const Vertex v = l.as_vertical().vertex;
      return std::array{at_height(v, 0), at_height(v, 1)};
    }
    const auto& h = l.as_harmonic();
    return std::array{Point{pentaline::A, h.h0}, Point{pentaline::B, h.h1}};
  }

  std::optional<std::array<Point, 3>> noncollinear_triple() const {
    return std::array{at_height(pentaline::A, 0), at_height(pentaline::B, 0),
                      at_height(pentaline::A, 1)};
  }

  std::optional<std::pair<Line, std::array<Point, 3>>> transversal(const Line& x, const Line& y,
                                                                   const Line& z) const {
    try {
      auto t = prism::transversal_for(x, y, z);
      return std::pair{std::move(t.line), std::move(t.points)};
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::optional<Point> b2_witness(const Point& a, const Point& b) const {
    if (a.vertex == b.vertex) return Point{a.vertex, b.height + (b.height - a.height)};
    const auto heights = prism::heights_of(prism::line_through(a, b));
    for (Vertex k : pentaline::all_vertices()) {
      Point c{k, heights[static_cast<std::size_t>(k.index())]};
      if (prism::between(a, b, c)) return c;
    }
    return std::nullopt;
  }

  std::optional<Point> t1_witness(const Point& a, const Point& b) const {
    if (a.vertex == b.vertex) {
      return Point{a.vertex, (a.height + b.height) * Qs5(Rational(BigInt(1), BigInt(2)))};
    }
    const auto heights = prism::heights_of(prism::line_through(a, b));
    for (Vertex k : pentaline::all_vertices()) {
      Point c{k, heights[static_cast<std::size_t>(k.index())]};
      if (prism::between(a, c, b)) return c;
    }
    return std::nullopt;
  }

 private:
  SampleBounds bounds_;
};

}  // namespace

StructureHandle make_prism(const SampleBounds& bounds) {
  return std::make_shared<ModelStructure<PrismModel>>(PrismModel(bounds));
}

}  // namespace nonpasch::engine::detail
