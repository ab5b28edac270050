#include "engine/generic.hpp"
#include "engine/models.hpp"
#include "nonpasch/gf5plane.hpp"
#include "nonpasch/literals.hpp"

namespace nonpasch::engine::detail {

namespace {

using gf5plane::FLine;
using gf5plane::FPoint;
using gf5plane::Relation;

class Gf5Model {
 public:
  using Point = FPoint;
  using Line = FLine;

  explicit Gf5Model(Relation rel) : rel_(rel) {}

  ModelId id() const { return rel_ == Relation::Mid ? ModelId::Gf5Mid : ModelId::Gf5Comp; }
  Capabilities capabilities() const { return {true, true, true, true}; }

  std::optional<std::string> unsupported(AxiomId a) const {
    if (a == AxiomId::Arch5 || a == AxiomId::Cantor5 || a == AxiomId::Dedekind5) {
      return std::string(to_string(a)) + " is stated for the five-point line only";
    }
    return std::nullopt;
  }

  std::vector<AxiomId> default_suite() const { return plane_suite(); }

  Point parse_point(const std::string& s) const { return literals::parse_fpoint(s); }
  Line parse_line(const std::string& s) const { return literals::parse_fline(s); }
  std::string point_literal(const Point& p) const { return literals::format(p); }
  std::string line_literal(const Line& l) const { return literals::format(l); }

  std::optional<Instance<Point, Line>> canonical_counterexample(AxiomId) const {
    return std::nullopt;
  }

  std::vector<Point> points() const { return gf5plane::all_points(); }
  std::vector<Line> lines() const { return gf5plane::all_lines(); }

  bool is_special(AxiomId) const { return false; }
  void for_each_special(AxiomId, const std::function<bool(const std::vector<Point>&)>&) const {}
  std::vector<Point> sample_special(AxiomId, Stream&) const { return {}; }
  std::optional<std::string> special_violation(AxiomId, const std::vector<Point>&) const {
    return std::nullopt;
  }

  // Sampling.
  Point sample_point(Stream& s) const { return FPoint::from_index(static_cast<int>(s.uniform(0, 24))); }
  Line sample_line(Stream& s) const {
    return gf5plane::all_lines()[static_cast<std::size_t>(s.uniform(0, 29))];
  }

  Line sample_line_through(const Point& p, Stream& s) const {
    std::vector<FLine> through;
    for (const auto& l : gf5plane::all_lines()) {
      if (l.contains(p)) through.push_back(l);
    }
    return through[static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(through.size()) - 1))];
  }

  std::vector<Point> sample_points_on(const Line& l, int n, Stream& s) const {
    auto pts = l.points();
    for (int i = 0; i < n; ++i) {
      std::swap(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(s.uniform(i, 4))]);
    }
    return {pts.begin(), pts.begin() + n};
  }

  Point sample_point_off(const Line& l, Stream& s) const {
    for (;;) {
      const Point p = sample_point(s);
      if (!l.contains(p)) return p;
    }
  }

  std::optional<Point> sample_between(const Point& a, const Point& b, Stream& s) const {
    const auto c = candidates(a, b, [&](const FPoint& x) { return between(a, x, b); });
    if (c.empty()) return std::nullopt;
    return c[static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(c.size()) - 1))];
  }

  std::optional<Point> sample_opposite(const Line& l, const Point& x, Stream& s) const {
    return beyond_line(*this, l, x, s);
  }

  std::array<Line, 3> sample_intersecting_triple(Stream& s) const {
    return triangle_or_pencil(*this, s);
  }

  // Primitives.
  bool incident(const Point& p, const Line& l) const { return l.contains(p); }
  bool collinear(const Point& p, const Point& q, const Point& r) const {
    return gf5plane::collinear(p, q, r);
  }
  bool between(const Point& x, const Point& y, const Point& z) const {
    return gf5plane::between(rel_, x, y, z);
  }
  std::optional<Line> line_through(const Point& p, const Point& q) const {
    if (p == q) return std::nullopt;
    return gf5plane::line_through(p, q);
  }
  std::optional<Point> intersect(const Line& l, const Line& m) const {
    for (const auto& p : l.points()) {
      if (m.contains(p)) return p;
    }
    return std::nullopt;
  }

  int lines_through_count(const Point& p, const Point& q) const {
    int n = 0;
    for (const auto& l : gf5plane::all_lines()) {
      if (l.contains(p) && l.contains(q)) ++n;
    }
    return n;
  }

  std::optional<std::array<Point, 2>> two_points(const Line& l) const {
    const auto pts = l.points();
    return std::array{pts[0], pts[1]};
  }

  std::optional<std::array<Point, 3>> noncollinear_triple() const {
    return std::array{FPoint{0, 0}, FPoint{1, 0}, FPoint{0, 1}};
  }

  /// First line, in lexicographic order, meeting x, y, z in three distinct points.
  std::optional<std::pair<Line, std::array<Point, 3>>> transversal(const Line& x, const Line& y,
                                                                   const Line& z) const {
    for (const auto& d : gf5plane::all_lines()) {
      if (d == x || d == y || d == z) continue;
      auto p = intersect(d, x);
      auto q = intersect(d, y);
      auto r = intersect(d, z);
      if (p && q && r && *p != *q && *q != *r && *p != *r) return std::pair{d, std::array{*p, *q, *r}};
    }
    return std::nullopt;
  }

  std::optional<Point> b2_witness(const Point& a, const Point& b) const {
    const auto c = candidates(a, b, [&](const FPoint& x) { return between(a, b, x); });
    if (c.empty()) return std::nullopt;
    return c.front();
  }

  std::optional<Point> t1_witness(const Point& a, const Point& b) const {
    const auto c = candidates(a, b, [&](const FPoint& x) { return between(a, x, b); });
    if (c.empty()) return std::nullopt;
    return c.front();
  }

 private:
  template <class Pred>
  std::vector<FPoint> candidates(const FPoint& a, const FPoint& b, Pred pred) const {
    std::vector<FPoint> out;
    if (a == b) return out;
    for (const auto& x : gf5plane::line_through(a, b).points()) {
      if (pred(x)) out.push_back(x);
    }
    return out;
  }

  Relation rel_;
};

}  // namespace

StructureHandle make_gf5(Relation rel) {
  return std::make_shared<ModelStructure<Gf5Model>>(Gf5Model(rel));
}

}  // namespace nonpasch::engine::detail
