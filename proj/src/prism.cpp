#include "nonpasch/prism.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonpasch/errors.hpp"

namespace nonpasch::prism {

using pentaline::between5;

const Vertical& PrismLine::as_vertical() const {
  if (const auto* v = std::get_if<Vertical>(&repr_)) return *v;
  throw Error(ErrorCode::WrongVariant, "expected a vertical line");
}

const Harmonic& PrismLine::as_harmonic() const {
  if (const auto* h = std::get_if<Harmonic>(&repr_)) return *h;
  throw Error(ErrorCode::WrongVariant, "expected a harmonic line");
}

PrismLine base_line() { return Harmonic{Qs5(0), Qs5(0)}; }

const std::array<std::array<Qs5, 2>, 5>& coefficient_rows() {
  static const std::array<std::array<Qs5, 2>, 5> rows = [] {
    const Qs5 phi = Qs5::phi_prime();
    return std::array<std::array<Qs5, 2>, 5>{{
        {Qs5(1), Qs5(0)},
        {Qs5(0), Qs5(1)},
        {Qs5(-1), phi},
        {-phi, -phi},
        {phi, Qs5(-1)},
    }};
  }();
  return rows;
}

Qs5 height_at(const Harmonic& h, Vertex v) {
  const auto& row = coefficient_rows()[static_cast<std::size_t>(v.index())];
  return row[0] * h.h0 + row[1] * h.h1;
}

std::array<Qs5, 5> heights_of(const PrismLine& l) {
  const Harmonic& h = l.as_harmonic();
  std::array<Qs5, 5> out;
  for (int k = 0; k < 5; ++k) out[static_cast<std::size_t>(k)] = height_at(h, Vertex(k));
  return out;
}

Qs5 run_recurrence(const Qs5& h0, const Qs5& h1, int steps) {
  const Qs5 phi = Qs5::phi_prime();
  Qs5 prev = h0;
  Qs5 cur = h1;
  if (steps == 0) return prev;
  for (int k = 1; k < steps; ++k) {
    Qs5 next = phi * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool incident(const PrismPoint& p, const PrismLine& l) {
  if (l.is_vertical()) return l.as_vertical().vertex == p.vertex;
  return height_at(l.as_harmonic(), p.vertex) == p.height;
}

PrismLine line_through(const PrismPoint& p, const PrismPoint& q) {
  if (p == q) throw Error(ErrorCode::SamePoint, "line through a single point");
  if (p.vertex == q.vertex) return Vertical{p.vertex};
  const auto& ri = coefficient_rows()[static_cast<std::size_t>(p.vertex.index())];
  const auto& rj = coefficient_rows()[static_cast<std::size_t>(q.vertex.index())];
  const Qs5 det = ri[0] * rj[1] - rj[0] * ri[1];
  const Qs5 h0 = (p.height * rj[1] - q.height * ri[1]) / det;
  const Qs5 h1 = (ri[0] * q.height - rj[0] * p.height) / det;
  return Harmonic{h0, h1};
}

std::optional<PrismPoint> intersect(const PrismLine& l, const PrismLine& m) {
  if (l == m) throw Error(ErrorCode::SameLine, "intersection of a line with itself");
  if (l.is_vertical() && m.is_vertical()) return std::nullopt;
  if (l.is_vertical() || m.is_vertical()) {
    const Vertex v = l.is_vertical() ? l.as_vertical().vertex : m.as_vertical().vertex;
    const Harmonic& h = l.is_vertical() ? m.as_harmonic() : l.as_harmonic();
    return PrismPoint{v, height_at(h, v)};
  }
  for (Vertex v : pentaline::all_vertices()) {
    Qs5 hl = height_at(l.as_harmonic(), v);
    if (hl == height_at(m.as_harmonic(), v)) return PrismPoint{v, std::move(hl)};
  }
  return std::nullopt;
}

int agreement_count(const Harmonic& l, const Harmonic& m) {
  int n = 0;
  for (Vertex v : pentaline::all_vertices()) {
    if (height_at(l, v) == height_at(m, v)) ++n;
  }
  return n;
}

bool collinear(const PrismPoint& p, const PrismPoint& q, const PrismPoint& r) {
  if (p == q) return true;
  return incident(r, line_through(p, q));
}

bool between3(const PrismPoint& p1, const PrismPoint& p2, const PrismPoint& p3) {
  if (p1 == p2 || p2 == p3 || p1 == p3) {
    throw Error(ErrorCode::NotDistinct, "betweenness of repeated points");
  }
  const PrismLine l = line_through(p1, p3);
  if (!incident(p2, l)) throw Error(ErrorCode::NotCollinear, "points are not collinear");
  if (l.is_vertical()) {
    const int s12 = (p2.height - p1.height).sign();
    const int s23 = (p3.height - p2.height).sign();
    return s12 == s23;
  }
  return between5(p1.vertex, p2.vertex, p3.vertex);
}

bool between(const PrismPoint& p1, const PrismPoint& p2, const PrismPoint& p3) {
  if (p1 == p2 || p2 == p3 || p1 == p3 || !collinear(p1, p2, p3)) return false;
  return between3(p1, p2, p3);
}

namespace {

bool meets(const PrismLine& l, const PrismLine& m) {
  return l == m || intersect(l, m).has_value();
}

Transversal three_harmonic(const std::array<PrismLine, 3>& in) {
  for (Vertex v : pentaline::all_vertices()) {
    std::array<PrismPoint, 3> pts{
        PrismPoint{v, height_at(in[0].as_harmonic(), v)},
        PrismPoint{v, height_at(in[1].as_harmonic(), v)},
        PrismPoint{v, height_at(in[2].as_harmonic(), v)},
    };
    if (pts[0] != pts[1] && pts[1] != pts[2] && pts[0] != pts[2]) {
      return {Vertical{v}, pts};
    }
  }
  // Each pair agrees at most once, so two of five vertices always survive.
  throw std::logic_error("three_harmonic: no separating vertex");
}

}  // namespace

Transversal transversal_for(const PrismLine& x, const PrismLine& y, const PrismLine& z) {
  const std::array<PrismLine, 3> in{x, y, z};
  if (x == y || y == z || x == z) {
    throw Error(ErrorCode::SameLine, "transversal needs three distinct lines");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (in[i].is_harmonic() && in[j].is_harmonic() && !meets(in[i], in[j])) {
        throw Error(ErrorCode::NotPairwiseIntersecting, "two harmonic lines do not meet");
      }
    }
  }

  std::vector<std::size_t> harmonic_idx, vertical_idx;
  for (std::size_t i = 0; i < 3; ++i) {
    (in[i].is_harmonic() ? harmonic_idx : vertical_idx).push_back(i);
  }

  Transversal out{base_line(), {}};
  switch (harmonic_idx.size()) {
    case 3:
      return three_harmonic(in);

    case 2: {
      const Harmonic& p = in[harmonic_idx[0]].as_harmonic();
      const Harmonic& q = in[harmonic_idx[1]].as_harmonic();
      const Vertex a = in[vertical_idx[0]].as_vertical().vertex;
      for (Vertex b : pentaline::all_vertices()) {
        for (Vertex c : pentaline::all_vertices()) {
          if (b == a || c == a || b == c) continue;
          // The new line must leave p at c and q at b to differ from both.
          if (height_at(p, b) == height_at(q, b) || height_at(p, c) == height_at(q, c)) continue;
          const PrismPoint on_p{b, height_at(p, b)};
          const PrismPoint on_q{c, height_at(q, c)};
          const PrismLine r = line_through(on_p, on_q);
          out.line = r;
          out.points[harmonic_idx[0]] = on_p;
          out.points[harmonic_idx[1]] = on_q;
          out.points[vertical_idx[0]] = PrismPoint{a, height_at(r.as_harmonic(), a)};
          return out;
        }
      }
      throw std::logic_error("transversal_for: no vertex pair");
    }

    case 1: {
      const Harmonic& p = in[harmonic_idx[0]].as_harmonic();
      const Vertex a = in[vertical_idx[0]].as_vertical().vertex;
      const Vertex b = in[vertical_idx[1]].as_vertical().vertex;
      std::vector<Vertex> free;
      for (Vertex v : pentaline::all_vertices()) {
        if (v != a && v != b) free.push_back(v);
      }
      const PrismPoint on_p{free[0], height_at(p, free[0])};
      const PrismPoint off_p{free[1], height_at(p, free[1]) + Qs5(1)};
      const PrismLine r = line_through(on_p, off_p);
      out.line = r;
      out.points[harmonic_idx[0]] = on_p;
      out.points[vertical_idx[0]] = PrismPoint{a, height_at(r.as_harmonic(), a)};
      out.points[vertical_idx[1]] = PrismPoint{b, height_at(r.as_harmonic(), b)};
      return out;
    }

    default: {
      for (std::size_t i = 0; i < 3; ++i) {
        out.points[i] = PrismPoint{in[i].as_vertical().vertex, Qs5(0)};
      }
      return out;
    }
  }
}

PaschStarWitness pasch_star_witness() {
  const Qs5 phi = Qs5::phi_prime();
  const PrismLine l1 = Harmonic{Qs5(0), Qs5(1)};
  const PrismLine l2 = Harmonic{Qs5(0), Qs5(2)};
  const PrismLine l3 = Harmonic{phi, Qs5(2)};
  const PrismPoint p = *intersect(l1, l2);
  const PrismPoint q = *intersect(l2, l3);
  const PrismPoint r = *intersect(l1, l3);
  const auto pq = pentaline::closed_segment(p.vertex, q.vertex);
  const auto qr = pentaline::closed_segment(q.vertex, r.vertex);
  const auto pr = pentaline::closed_segment(p.vertex, r.vertex);
  const PrismLine d = Vertical{pq.apex};

  PaschStarWitness w{
      l1, l2, l3, p, q, r, d,
      *intersect(d, l2),
      *intersect(d, l1),
      *intersect(d, l3),
      {pq.end1, pq.end2, pq.apex},
      {qr.end1, qr.end2, qr.apex},
      {pr.end1, pr.end2, pr.apex},
  };
  if (!verify(w)) throw std::logic_error("pasch_star_witness failed verification");
  return w;
}

bool verify(const PaschStarWitness& w) {
  auto closed_vertices = [](const PrismPoint& a, const PrismPoint& b) {
    const auto s = pentaline::closed_segment(a.vertex, b.vertex);
    return std::array<Vertex, 3>{s.end1, s.end2, s.apex};
  };
  const bool triangle = w.p != w.q && w.q != w.r && w.p != w.r && !collinear(w.p, w.q, w.r) &&
                        incident(w.p, w.l1) && incident(w.p, w.l2) && incident(w.q, w.l2) &&
                        incident(w.q, w.l3) && incident(w.r, w.l1) && incident(w.r, w.l3);
  if (!triangle) return false;
  if (incident(w.p, w.d) || incident(w.q, w.d) || incident(w.r, w.d)) return false;
  // Premise: d crosses PQ strictly inside and meets both remaining side lines.
  if (!incident(w.d_on_pq, w.d) || !incident(w.d_on_pq, w.l2) || !between(w.p, w.d_on_pq, w.q)) {
    return false;
  }
  if (!incident(w.x_d, w.d) || !incident(w.x_d, w.l1)) return false;
  if (!incident(w.z_d, w.d) || !incident(w.z_d, w.l3)) return false;
  // Conclusion fails: neither crossing lies on its closed side.
  if (between(w.q, w.z_d, w.r) || w.z_d == w.q || w.z_d == w.r) return false;
  if (between(w.p, w.x_d, w.r) || w.x_d == w.p || w.x_d == w.r) return false;
  return w.closed_pq == closed_vertices(w.p, w.q) && w.closed_qr == closed_vertices(w.q, w.r) &&
         w.closed_pr == closed_vertices(w.p, w.r);
}

ParallelClass parallels_through(const PrismPoint& x, const PrismLine& l, std::size_t sample_count) {
  if (incident(x, l)) throw Error(ErrorCode::IncidentPoint, "point lies on the line");
  if (l.is_vertical()) return UniqueParallel{Vertical{x.vertex}};

  const Harmonic& h = l.as_harmonic();
  FinitelyManyMeet out;
  out.meeting.push_back(Vertical{x.vertex});
  for (Vertex w : pentaline::all_vertices()) {
    if (w == x.vertex) continue;
    out.meeting.push_back(line_through(x, PrismPoint{w, height_at(h, w)}));
  }

  const Vertex w = Vertex((x.vertex.index() + 1) % 5);
  const Qs5 base = height_at(h, w);
  for (std::int64_t k = 1; out.sample_parallels.size() < sample_count; ++k) {
    const PrismLine cand = line_through(x, PrismPoint{w, base + Qs5(k)});
    if (!intersect(cand, l)) out.sample_parallels.push_back(cand);
  }
  return out;
}

Qs5 sample_qs5(Stream& s, const SampleBounds& bounds) {
  Rational a = s.rational(bounds);
  Rational b = s.rational(bounds);
  return {std::move(a), std::move(b)};
}

PrismPoint sample_point(Stream& s, const SampleBounds& bounds) {
  const Vertex v(static_cast<int>(s.uniform(0, 4)));
  return {v, sample_qs5(s, bounds)};
}

PrismLine sample_line(Stream& s, const SampleBounds& bounds) {
  if (s.one_in(4)) return Vertical{Vertex(static_cast<int>(s.uniform(0, 4)))};
  Qs5 h0 = sample_qs5(s, bounds);
  Qs5 h1 = sample_qs5(s, bounds);
  return Harmonic{std::move(h0), std::move(h1)};
}

}  // namespace nonpasch::prism
