#include "engine/generic.hpp"
#include "engine/models.hpp"
#include "nonpasch/literals.hpp"
#include "nonpasch/punctured.hpp"

namespace nonpasch::engine::detail {

namespace {

using punctured::QLine;
using punctured::QPoint;

/// a + t (b - a), or nothing at the hole.
std::optional<QPoint> affine(const QPoint& a, const QPoint& b, const Rational& t) {
  Rational x = a.x() + t * (b.x() - a.x());
  Rational y = a.y() + t * (b.y() - a.y());
  if (x.is_zero() && y.is_zero()) return std::nullopt;
  return QPoint(std::move(x), std::move(y));
}

Rational ratio(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

class PuncturedModel {
 public:
  using Point = QPoint;
  using Line = QLine;

  explicit PuncturedModel(SampleBounds bounds) : bounds_(bounds) {}

  ModelId id() const { return ModelId::Punctured; }
  Capabilities capabilities() const { return {false, false, false, true}; }

  std::optional<std::string> unsupported(AxiomId a) const {
    if (a == AxiomId::Arch5 || a == AxiomId::Cantor5 || a == AxiomId::Dedekind5) {
      return std::string(to_string(a)) + " is stated for the five-point line only";
    }
    return std::nullopt;
  }

  std::vector<AxiomId> default_suite() const { return plane_suite(); }

  Point parse_point(const std::string& s) const { return literals::parse_qpoint(s); }
  Line parse_line(const std::string& s) const { return literals::parse_qline(s); }
  std::string point_literal(const Point& p) const { return literals::format(p); }
  std::string line_literal(const Line& l) const { return literals::format(l); }

  std::optional<Instance<Point, Line>> canonical_counterexample(AxiomId a) const {
    if (a != AxiomId::B4) return std::nullopt;
    const auto w = punctured::q_pasch_witness();
    return Instance<Point, Line>{{w.a, w.b, w.c}, {w.line}};
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
  Point sample_point(Stream& s) const { return punctured::sample_point(s, bounds_); }
  Line sample_line(Stream& s) const { return punctured::sample_line(s, bounds_); }

  Line sample_line_through(const Point& p, Stream& s) const {
    if (s.one_in(4)) return QLine(p.y(), -p.x(), 0);
    for (;;) {
      const Point q = sample_point(s);
      if (q != p) return punctured::q_line_through(p, q);
    }
  }

  std::vector<Point> sample_points_on(const Line& l, int n, Stream& s) const {
    std::vector<Point> out;
    while (static_cast<int>(out.size()) < n) {
      auto p = punctured::point_at(l, s.rational(bounds_));
      if (p && std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(std::move(*p));
    }
    return out;
  }

  Point sample_point_off(const Line& l, Stream& s) const {
    for (;;) {
      Point p = sample_point(s);
      if (!punctured::q_incident(p, l)) return p;
    }
  }

  std::optional<Point> sample_between(const Point& a, const Point& b, Stream& s) const {
    const std::int64_t den = s.uniform(2, 8);
    if (auto p = affine(a, b, ratio(s.uniform(1, den - 1), den))) return p;
    return t1_witness(a, b);
  }

  /// Through the hole, X and -X are separated by nothing the model can see.
  std::optional<Point> sample_opposite(const Line& l, const Point& x, Stream& s) const {
    if (l.passes_through_hole() && s.one_in(2)) return QPoint(-x.x(), -x.y());
    return beyond_line(*this, l, x, s);
  }

  std::array<Line, 3> sample_intersecting_triple(Stream& s) const {
    return triangle_or_pencil(*this, s);
  }

  // Primitives.
  bool incident(const Point& p, const Line& l) const { return punctured::q_incident(p, l); }
  bool collinear(const Point& p, const Point& q, const Point& r) const {
    return punctured::q_collinear(p, q, r);
  }
  bool between(const Point& x, const Point& y, const Point& z) const {
    return punctured::q_between_rel(x, y, z);
  }
  std::optional<Line> line_through(const Point& p, const Point& q) const {
    if (p == q) return std::nullopt;
    return punctured::q_line_through(p, q);
  }
  std::optional<Point> intersect(const Line& l, const Line& m) const {
    return punctured::q_intersect(l, m);
  }
  int lines_through_count(const Point&, const Point&) const { return 1; }

  std::optional<std::array<Point, 2>> two_points(const Line& l) const {
    auto [p, q] = punctured::points_on(l);
    return std::array{p, q};
  }

  std::optional<std::array<Point, 3>> noncollinear_triple() const {
    return std::array{QPoint(1, 0), QPoint(0, 1), QPoint(1, 1)};
  }

  /// Joins a point of x with a point of y, both away from the pairwise
  /// meets, until the join crosses z at a third model point.
  std::optional<std::pair<Line, std::array<Point, 3>>> transversal(const Line& x, const Line& y,
                                                                   const Line& z) const {
    for (std::int64_t i = 1; i <= 8; ++i) {
      for (std::int64_t j = 1; j <= 8; ++j) {
        auto p = punctured::point_at(x, i);
        auto q = punctured::point_at(y, -j);
        if (!p || !q || *p == *q || punctured::q_incident(*p, y) || punctured::q_incident(*q, x)) {
          continue;
        }
        const Line d = punctured::q_line_through(*p, *q);
        if (d == x || d == y || d == z) continue;
        auto r = punctured::q_intersect(d, z);
        if (!r || *r == *p || *r == *q) continue;
        return std::pair{d, std::array{*p, *q, *r}};
      }
    }
    return std::nullopt;
  }

  std::optional<Point> b2_witness(const Point& a, const Point& b) const {
    if (auto c = affine(a, b, 2)) return c;
    return affine(a, b, 3);
  }

  std::optional<Point> t1_witness(const Point& a, const Point& b) const {
    if (auto c = affine(a, b, ratio(1, 2))) return c;
    return affine(a, b, ratio(1, 3));
  }

 private:
  SampleBounds bounds_;
};

}  // namespace

StructureHandle make_punctured(const SampleBounds& bounds) {
  return std::make_shared<ModelStructure<PuncturedModel>>(PuncturedModel(bounds));
}

}  // namespace nonpasch::engine::detail
