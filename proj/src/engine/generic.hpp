#pragma once

// Axiom checkers written once against a model adaptor M. The adaptor
// supplies the primitive predicates (incidence, betweenness, joins and
// meets), constructive witnesses for the existential parts of the axioms,
// samplers, and literal conversion; see the adaptors in model_*.cpp.

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonpasch/engine/structure.hpp"
#include "nonpasch/errors.hpp"

namespace nonpasch::engine::detail {

template <class P, class L>
struct Instance {
  std::vector<P> pts;
  std::vector<L> lines;
};

/// Number of points and lines in one instance of each axiom.
struct Shape {
  int points;
  int lines;
};

inline Shape shape_of(AxiomId a) {
  switch (a) {
    case AxiomId::I1:
    case AxiomId::I2:
    case AxiomId::B2:
    case AxiomId::T1: return {2, 0};
    case AxiomId::I3: return {0, 1};
    case AxiomId::I4: return {0, 3};
    case AxiomId::B1:
    case AxiomId::B3: return {3, 0};
    case AxiomId::B4:
    case AxiomId::B4star: return {3, 1};
    case AxiomId::T2:
    case AxiomId::T3:
    case AxiomId::T4: return {4, 0};
    case AxiomId::T5: return {3, 1};
    default: return {0, 0};
  }
}

/// Three pairwise-meeting lines: the sides of a random triangle, or three
/// lines of a random pencil.
template <class M>
std::array<typename M::Line, 3> triangle_or_pencil(const M& m, Stream& s) {
  for (;;) {
    if (s.one_in(2)) {
      const auto p = m.sample_point(s);
      const auto q = m.sample_point(s);
      const auto r = m.sample_point(s);
      if (p == q || q == r || p == r || m.collinear(p, q, r)) continue;
      return {*m.line_through(p, q), *m.line_through(q, r), *m.line_through(r, p)};
    }
    const auto x = m.sample_point(s);
    const auto l1 = m.sample_line_through(x, s);
    const auto l2 = m.sample_line_through(x, s);
    const auto l3 = m.sample_line_through(x, s);
    if (l1 == l2 || l2 == l3 || l1 == l3) continue;
    return {l1, l2, l3};
  }
}

/// A point Z with (X W Z) for a point W of `l`, so X and Z are separated by `l`.
template <class M>
std::optional<typename M::Point> beyond_line(const M& m, const typename M::Line& l,
                                             const typename M::Point& x, Stream& s) {
  const auto w = m.sample_points_on(l, 1, s)[0];
  return m.b2_witness(x, w);
}

template <class M>
class ModelStructure final : public Structure {
 public:
  using P = typename M::Point;
  using L = typename M::Line;
  using Inst = Instance<P, L>;

  explicit ModelStructure(M model) : m_(std::move(model)) {}

  ModelId model() const override { return m_.id(); }
  Capabilities capabilities() const override { return m_.capabilities(); }
  bool applicable(AxiomId a) const override { return !m_.unsupported(a).has_value(); }
  std::vector<AxiomId> default_suite() const override { return m_.default_suite(); }

  AxiomReport check(AxiomId a, const Strategy& s) const override {
    const auto start = std::chrono::steady_clock::now();
    AxiomReport r;
    r.model = m_.id();
    r.axiom = a;
    r.strategy = s;
    if (s.kind == Strategy::Kind::Exhaustive && !m_.capabilities().enumerable) {
      throw Error(ErrorCode::IncompatibleStrategy,
                  std::string(to_string(m_.id())) + " cannot be enumerated");
    }
    if (auto reason = m_.unsupported(a)) {
      r.status = Status::Unsupported;
      r.reason = *reason;
    } else if (auto found = find_violation(a, s)) {
      r.status = Status::Fails;
      r.witness = std::move(found);
    } else {
      r.status = s.kind == Strategy::Kind::Exhaustive ? Status::Holds : Status::HoldsOnSample;
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  bool replay(AxiomId a, const Witness& w) const override {
    if (m_.unsupported(a)) return false;
    Inst inst;
    for (const auto& p : w.points) inst.pts.push_back(m_.parse_point(p));
    for (const auto& l : w.lines) inst.lines.push_back(m_.parse_line(l));
    if (a == AxiomId::I3 && inst.lines.empty()) return global_i3_violation().has_value();
    return violation(a, inst).has_value();
  }

 private:
  std::optional<Witness> find_violation(AxiomId a, const Strategy& s) const {
    if (auto inst = m_.canonical_counterexample(a)) {
      auto v = violation(a, *inst);
      if (!v) throw std::logic_error("canonical counterexample does not verify");
      return make_witness(*inst, *v);
    }
    if (a == AxiomId::I3) {
      if (auto v = global_i3_violation()) return Witness{{}, {}, *v};
    }
    std::optional<Witness> found;
    if (s.kind == Strategy::Kind::Exhaustive) {
      for_each_instance(a, [&](const Inst& inst) {
        if (auto v = violation(a, inst)) {
          found = make_witness(inst, *v);
          return false;
        }
        return true;
      });
    } else {
      Stream stream(s.seed, static_cast<std::uint64_t>(a));
      for (std::size_t i = 0; i < s.samples && !found; ++i) {
        const Inst inst = sample_instance(a, stream);
        if (auto v = violation(a, inst)) found = make_witness(inst, *v);
      }
    }
    return found;
  }

  Witness make_witness(const Inst& inst, std::string violation) const {
    Witness w;
    for (const auto& p : inst.pts) w.points.push_back(m_.point_literal(p));
    for (const auto& l : inst.lines) w.lines.push_back(m_.line_literal(l));
    w.violation = std::move(violation);
    return w;
  }

  std::string lit(const P& p) const { return m_.point_literal(p); }
  std::string lit(const L& l) const { return m_.line_literal(l); }

  // --- exhaustive enumeration ------------------------------------------

  void for_each_instance(AxiomId a, const std::function<bool(const Inst&)>& fn) const {
    if (m_.is_special(a)) {
      m_.for_each_special(a, [&](const std::vector<P>& pts) { return fn(Inst{pts, {}}); });
      return;
    }
    const Shape shape = shape_of(a);
    const auto points = m_.points();
    const auto lines = m_.lines();
    const int slots = shape.points + shape.lines;
    std::vector<std::size_t> idx(static_cast<std::size_t>(slots), 0);
    auto radix = [&](int k) { return k < shape.points ? points.size() : lines.size(); };
    Inst inst;
    for (;;) {
      inst.pts.clear();
      inst.lines.clear();
      for (int k = 0; k < slots; ++k) {
        const auto i = idx[static_cast<std::size_t>(k)];
        if (k < shape.points) {
          inst.pts.push_back(points[i]);
        } else {
          inst.lines.push_back(lines[i]);
        }
      }
      if (!fn(inst)) return;
      int k = slots - 1;
      while (k >= 0) {
        auto& i = idx[static_cast<std::size_t>(k)];
        if (++i < radix(k)) break;
        i = 0;
        --k;
      }
      if (k < 0) return;
    }
  }

  // --- sampling ---------------------------------------------------------

  std::pair<P, P> sample_pair(Stream& s) const {
    const P p = m_.sample_point(s);
    const L l = m_.sample_line_through(p, s);
    const auto on = m_.sample_points_on(l, 2, s);
    return {p, on[0] == p ? on[1] : on[0]};
  }

  Inst sample_instance(AxiomId a, Stream& s) const {
    if (m_.is_special(a)) return Inst{m_.sample_special(a, s), {}};
    Inst inst;
    switch (a) {
      case AxiomId::I1:
      case AxiomId::I2:
      case AxiomId::B2:
      case AxiomId::T1: {
        auto [p, q] = sample_pair(s);
        inst.pts = {p, q};
        break;
      }
      case AxiomId::I3:
        inst.lines = {m_.sample_line(s)};
        break;
      case AxiomId::I4: {
        auto t = m_.sample_intersecting_triple(s);
        inst.lines = {t[0], t[1], t[2]};
        break;
      }
      case AxiomId::B1:
      case AxiomId::B3:
        inst.pts = m_.sample_points_on(m_.sample_line(s), 3, s);
        break;
      case AxiomId::B4:
      case AxiomId::B4star: {
        auto [a0, b0] = sample_pair(s);
        const L ab = *m_.line_through(a0, b0);
        const P c0 = m_.sample_point_off(ab, s);
        inst.pts = {a0, b0, c0};
        const auto d = m_.sample_between(a0, b0, s);
        std::optional<L> cut;
        for (int attempt = 0; attempt < 32 && d && !cut; ++attempt) {
          std::optional<L> cand;
          if (attempt % 2 == 0) {
            // Aim at a point of line BC so the cut meets at least two sides.
            const L bc = *m_.line_through(b0, c0);
            const P e = m_.sample_points_on(bc, 1, s)[0];
            cand = m_.line_through(*d, e);
          } else {
            cand = m_.sample_line_through(*d, s);
          }
          if (cand && !m_.incident(a0, *cand) && !m_.incident(b0, *cand) &&
              !m_.incident(c0, *cand)) {
            cut = cand;
          }
        }
        inst.lines = {cut ? *cut : m_.sample_line(s)};
        break;
      }
      case AxiomId::T2: {
        const L l = m_.sample_line(s);
        inst.pts = m_.sample_points_on(l, 3, s);
        auto x = m_.sample_between(inst.pts[0], inst.pts[1], s);
        inst.pts.push_back(x ? *x : m_.sample_points_on(l, 1, s)[0]);
        break;
      }
      case AxiomId::T3:
      case AxiomId::T4:
        inst.pts = m_.sample_points_on(m_.sample_line(s), 4, s);
        break;
      case AxiomId::T5: {
        const L l = m_.sample_line(s);
        const P x = m_.sample_point_off(l, s);
        const P y = m_.sample_point_off(l, s);
        auto z = m_.sample_opposite(l, x, s);
        inst.pts = {x, y, z ? *z : m_.sample_point_off(l, s)};
        inst.lines = {l};
        break;
      }
      default:
        break;
    }
    return inst;
  }

  // --- instance checks --------------------------------------------------

  bool distinct(const std::vector<P>& v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (v[i] == v[j]) return false;
      }
    }
    return true;
  }

  bool all_collinear(const std::vector<P>& v) const {
    for (std::size_t k = 2; k < v.size(); ++k) {
      if (!m_.collinear(v[0], v[1], v[k])) return false;
    }
    return true;
  }

  bool meet(const L& l, const L& k) const { return l == k || m_.intersect(l, k).has_value(); }

  std::optional<std::string> global_i3_violation() const {
    auto t = m_.noncollinear_triple();
    if (!t || !distinct({(*t)[0], (*t)[1], (*t)[2]}) || m_.collinear((*t)[0], (*t)[1], (*t)[2])) {
      return "no three non-collinear points";
    }
    return std::nullopt;
  }

  std::optional<std::string> violation(AxiomId a, const Inst& inst) const {
    const auto& pt = inst.pts;
    const auto& ln = inst.lines;
    switch (a) {
      case AxiomId::I1: {
        if (pt[0] == pt[1]) return std::nullopt;
        auto l = m_.line_through(pt[0], pt[1]);
        if (!l || !m_.incident(pt[0], *l) || !m_.incident(pt[1], *l)) {
          return "no line through " + lit(pt[0]) + " and " + lit(pt[1]);
        }
        return std::nullopt;
      }
      case AxiomId::I2: {
        if (pt[0] == pt[1]) return std::nullopt;
        const auto n = m_.lines_through_count(pt[0], pt[1]);
        if (n > 1) return std::to_string(n) + " lines through " + lit(pt[0]) + " and " + lit(pt[1]);
        return std::nullopt;
      }
      case AxiomId::I3: {
        auto two = m_.two_points(ln[0]);
        if (!two || (*two)[0] == (*two)[1] || !m_.incident((*two)[0], ln[0]) ||
            !m_.incident((*two)[1], ln[0])) {
          return "line " + lit(ln[0]) + " has fewer than two points";
        }
        return std::nullopt;
      }
      case AxiomId::I4: {
        if (ln[0] == ln[1] || ln[1] == ln[2] || ln[0] == ln[2]) return std::nullopt;
        if (!meet(ln[0], ln[1]) || !meet(ln[1], ln[2]) || !meet(ln[0], ln[2])) return std::nullopt;
        auto t = m_.transversal(ln[0], ln[1], ln[2]);
        if (!t) return "no transversal of the three lines";
        const auto& [d, pts] = *t;
        const bool ok = d != ln[0] && d != ln[1] && d != ln[2] &&
                        distinct({pts[0], pts[1], pts[2]}) && m_.incident(pts[0], d) &&
                        m_.incident(pts[1], d) && m_.incident(pts[2], d) &&
                        m_.incident(pts[0], ln[0]) && m_.incident(pts[1], ln[1]) &&
                        m_.incident(pts[2], ln[2]);
        if (!ok) return "constructed transversal " + lit(d) + " is invalid";
        return std::nullopt;
      }
      case AxiomId::B1: {
        if (!m_.between(pt[0], pt[1], pt[2])) return std::nullopt;
        if (!m_.between(pt[2], pt[1], pt[0])) {
          return "(" + lit(pt[0]) + " " + lit(pt[1]) + " " + lit(pt[2]) + ") but not the reverse";
        }
        if (!m_.collinear(pt[0], pt[1], pt[2])) return "between-triple is not collinear";
        return std::nullopt;
      }
      case AxiomId::B2: {
        if (pt[0] == pt[1]) return std::nullopt;
        auto b = m_.b2_witness(pt[0], pt[1]);
        if (!b || !m_.between(pt[0], pt[1], *b)) {
          return "no point beyond " + lit(pt[1]) + " seen from " + lit(pt[0]);
        }
        return std::nullopt;
      }
      case AxiomId::B3: {
        if (!distinct(pt) || !all_collinear(pt)) return std::nullopt;
        const int n = int(m_.between(pt[1], pt[0], pt[2])) + int(m_.between(pt[0], pt[1], pt[2])) +
                      int(m_.between(pt[0], pt[2], pt[1]));
        if (n != 1) return std::to_string(n) + " of the three points lie between the others";
        return std::nullopt;
      }
      case AxiomId::B4:
      case AxiomId::B4star:
        return pasch_violation(a == AxiomId::B4star, pt[0], pt[1], pt[2], ln[0]);
      case AxiomId::T1: {
        if (pt[0] == pt[1]) return std::nullopt;
        auto x = m_.t1_witness(pt[0], pt[1]);
        if (!x || !m_.between(pt[0], *x, pt[1])) {
          return "segment " + lit(pt[0]) + " " + lit(pt[1]) + " has no inner point";
        }
        return std::nullopt;
      }
      case AxiomId::T2: {
        if (!distinct(pt) || !all_collinear(pt)) return std::nullopt;
        const P& x = pt[3];
        if (m_.between(pt[0], x, pt[1]) && !m_.between(pt[1], x, pt[2]) &&
            !m_.between(pt[0], x, pt[2])) {
          return lit(x) + " lies inside segment " + lit(pt[0]) + " " + lit(pt[1]) +
                 " but inside neither " + lit(pt[1]) + " " + lit(pt[2]) + " nor " + lit(pt[0]) +
                 " " + lit(pt[2]);
        }
        return std::nullopt;
      }
      case AxiomId::T3: {
        if (!distinct(pt) || !all_collinear(pt)) return std::nullopt;
        if (m_.between(pt[0], pt[1], pt[2]) && m_.between(pt[0], pt[2], pt[3]) &&
            !m_.between(pt[0], pt[1], pt[3])) {
          auto triple = [&](int i, int j, int k) {
            return "(" + lit(pt[i]) + " " + lit(pt[j]) + " " + lit(pt[k]) + ")";
          };
          std::string v = triple(0, 1, 2) + " and " + triple(0, 2, 3) + " hold but " +
                          triple(0, 1, 3) + " does not";
          if (m_.between(pt[3], pt[0], pt[1])) v += "; " + triple(3, 0, 1) + " holds instead";
          return v;
        }
        return std::nullopt;
      }
      case AxiomId::T4: {
        if (!distinct(pt) || !all_collinear(pt)) return std::nullopt;
        const P& o = pt[0];
        auto same = [&](const P& u, const P& v) { return m_.between(o, u, v) || m_.between(o, v, u); };
        return class_violation(same, pt[1], pt[2], pt[3], "of " + lit(o));
      }
      case AxiomId::T5: {
        const L& l = ln[0];
        if (!distinct(pt)) return std::nullopt;
        for (const auto& p : pt) {
          if (m_.incident(p, l)) return std::nullopt;
        }
        auto same = [&](const P& u, const P& v) {
          const L uv = *m_.line_through(u, v);
          auto w = m_.intersect(l, uv);
          return !(w && m_.between(u, *w, v));
        };
        return class_violation(same, pt[0], pt[1], pt[2], "of " + lit(l));
      }
      default:
        return m_.special_violation(a, pt);
    }
  }

  template <class Same>
  std::optional<std::string> class_violation(Same same, const P& x, const P& y, const P& z,
                                             const std::string& where) const {
    const bool xy = same(x, y), yz = same(y, z), xz = same(x, z);
    // Transitivity, through each of the three points as the middle one.
    if ((xy && yz && !xz) || (xy && xz && !yz) || (xz && yz && !xy)) {
      return "same-side relation " + where + " is not transitive";
    }
    if (!xy && !yz && !xz) return "three pairwise separated points: more than two sides " + where;
    return std::nullopt;
  }

  std::optional<std::string> pasch_violation(bool weak, const P& a, const P& b, const P& c,
                                             const L& cut) const {
    if (!distinct({a, b, c}) || m_.collinear(a, b, c)) return std::nullopt;
    if (m_.incident(a, cut) || m_.incident(b, cut) || m_.incident(c, cut)) return std::nullopt;
    auto d = m_.intersect(cut, *m_.line_through(a, b));
    if (!d || !m_.between(a, *d, b)) return std::nullopt;
    auto e = m_.intersect(cut, *m_.line_through(b, c));
    auto f = m_.intersect(cut, *m_.line_through(a, c));
    if (weak && (!e || !f)) return std::nullopt;
    const bool crosses_bc = e && m_.between(b, *e, c);
    const bool crosses_ac = f && m_.between(a, *f, c);
    if (crosses_bc || crosses_ac) return std::nullopt;
    std::ostringstream os;
    const auto side = [&](const P& x, const P& y) { return "(" + lit(x) + " " + lit(y) + ")"; };
    os << "line crosses side " << side(a, b) << " at " << lit(*d) << " but meets line " << side(b, c) << ' '
       << (e ? "at " + lit(*e) + " outside the side" : std::string("nowhere")) << " and line "
       << side(a, c) << ' ' << (f ? "at " + lit(*f) + " outside the side" : std::string("nowhere"));
    return os.str();
  }

  M m_;
};

}  // namespace nonpasch::engine::detail
