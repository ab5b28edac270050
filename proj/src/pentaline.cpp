#include "nonpasch/pentaline.hpp"

#include <algorithm>
#include <numeric>

#include "nonpasch/errors.hpp"

namespace nonpasch::pentaline {

void throw_bad_vertex(int index) {
  throw Error(ErrorCode::NotOnModel, "vertex index " + std::to_string(index) + " not in 0..4");
}

std::array<Vertex, 5> all_vertices() { return {A, B, C, D, E}; }

int cyclic_distance(Vertex u, Vertex v) {
  const int d = (v.index() - u.index() + 5) % 5;
  return std::min(d, 5 - d);
}

Vertex parse_vertex(const std::string& text) {
  if (text.size() != 1 || text[0] < 'A' || text[0] > 'E') {
    throw ParseError(text, 0, "expected a vertex letter A..E");
  }
  return Vertex(text[0] - 'A');
}

std::string_view to_string(SegmentClass c) {
  return c == SegmentClass::Small ? "Small" : "Large";
}

bool operator==(const Segment5& s, const Segment5& t) {
  const bool same_ends = (s.end1 == t.end1 && s.end2 == t.end2) ||
                         (s.end1 == t.end2 && s.end2 == t.end1);
  return same_ends && s.apex == t.apex && s.cls == t.cls;
}

Vertex apex_of(Vertex i, Vertex j, Vertex k) {
  if (i == j || j == k || i == k) {
    throw Error(ErrorCode::NotDistinct, std::string("apex of repeated vertices ") +
                                            i.letter() + j.letter() + k.letter());
  }
  // Chord length is monotone in cyclic distance, so the isosceles apex is
  // the vertex at equal cyclic distance from the other two.
  if (cyclic_distance(i, j) == cyclic_distance(i, k)) return i;
  if (cyclic_distance(j, i) == cyclic_distance(j, k)) return j;
  return k;
}

bool between5(Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) return false;
  return apex_of(x, y, z) == y;
}

Segment5 closed_segment(Vertex i, Vertex j) {
  if (i == j) {
    throw Error(ErrorCode::Degenerate, std::string("segment with equal ends ") + i.letter());
  }
  for (Vertex v : all_vertices()) {
    if (between5(i, v, j)) {
      const SegmentClass cls =
          cyclic_distance(i, j) == 2 ? SegmentClass::Small : SegmentClass::Large;
      return {i, j, v, cls};
    }
  }
  // B3 on the pentagon guarantees an apex.
  throw Error(ErrorCode::Degenerate, "no apex found");
}

std::vector<Segment5> all_segments() {
  std::vector<Segment5> out;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) out.push_back(closed_segment(Vertex(i), Vertex(j)));
  }
  return out;
}

Segment5 union_segments(const Segment5& s, const Segment5& t) {
  std::vector<Vertex> shared;
  for (Vertex v : s.closed_set()) {
    if (t.contains(v)) shared.push_back(v);
  }
  if (shared.size() > 1) {
    throw Error(ErrorCode::OverlappingSegments, "closed sets share " +
                                                    std::to_string(shared.size()) + " points");
  }
  if (shared.empty() || !s.has_endpoint(shared[0]) || !t.has_endpoint(shared[0])) {
    throw Error(ErrorCode::NoCommonEndpoint, "segments do not meet in a common endpoint");
  }
  const Vertex common = shared[0];
  const Vertex free_s = s.end1 == common ? s.end2 : s.end1;
  const Vertex free_t = t.end1 == common ? t.end2 : t.end1;
  return closed_segment(free_s, free_t);
}

Gf3Length segment_length(const Segment5& s) {
  return {s.cls == SegmentClass::Small ? 1 : 2};
}

bool congruent(const Segment5& s, const Segment5& t) { return s.cls == t.cls; }

int layoff_count(Vertex p, SegmentClass c) {
  const auto segs = all_segments();
  return static_cast<int>(std::count_if(segs.begin(), segs.end(), [&](const Segment5& s) {
    return s.cls == c && s.has_endpoint(p);
  }));
}

std::vector<std::pair<Gf3Length, Gf3Length>> additive_length_assignments() {
  const auto segs = all_segments();
  std::vector<std::pair<Gf3Length, Gf3Length>> out;
  for (int small = 0; small < 3; ++small) {
    for (int large = 0; large < 3; ++large) {
      auto len = [&](const Segment5& s) {
        return Gf3Length{s.cls == SegmentClass::Small ? small : large};
      };
      bool additive = true;
      for (const auto& s : segs) {
        for (const auto& t : segs) {
          try {
            const Segment5 u = union_segments(s, t);
            if (len(u) != len(s) + len(t)) additive = false;
          } catch (const Error&) {
          }
        }
      }
      if (additive) out.emplace_back(Gf3Length{small}, Gf3Length{large});
    }
  }
  return out;
}

int count_inducing_orders(int n, const std::function<bool(int, int, int)>& between) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    // rank[p] = position of p in the order
    std::vector<int> rank(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        for (int z = 0; z < n && ok; ++z) {
          if (x == y || y == z || x == z) continue;
          const int rx = rank[static_cast<std::size_t>(x)];
          const int ry = rank[static_cast<std::size_t>(y)];
          const int rz = rank[static_cast<std::size_t>(z)];
          const bool ordered = (rx < ry && ry < rz) || (rz < ry && ry < rx);
          if (ordered != between(x, y, z)) ok = false;
        }
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

int count_orders_satisfying(const std::vector<int>& points,
                            const std::vector<std::array<int, 3>>& triples) {
  std::vector<int> perm = points;
  std::sort(perm.begin(), perm.end());
  int count = 0;
  do {
    auto pos = [&](int p) { return std::find(perm.begin(), perm.end(), p) - perm.begin(); };
    const bool ok = std::all_of(triples.begin(), triples.end(), [&](const auto& t) {
      const auto px = pos(t[0]);
      const auto py = pos(t[1]);
      const auto pz = pos(t[2]);
      return (px < py && py < pz) || (pz < py && py < px);
    });
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

OrderabilityReport no_linear_order_witness() {
  OrderabilityReport r;
  r.orders_searched = 120;
  r.inducing_orders = count_inducing_orders(
      5, [](int x, int y, int z) { return between5(Vertex(x), Vertex(y), Vertex(z)); });
  r.restricted_triples = {{A, B, C}, {A, C, E}, {E, A, B}};
  std::vector<std::array<int, 3>> triples;
  for (const auto& t : r.restricted_triples) {
    triples.push_back({t[0].index(), t[1].index(), t[2].index()});
  }
  r.restricted_searched = 24;
  r.restricted_satisfying =
      count_orders_satisfying({A.index(), B.index(), C.index(), E.index()}, triples);
  return r;
}

DegeneratePaschWitness degenerate_pasch_failure() {
  // Open segments: AC = {B}, CD = {A}, AD = {E}.
  return {{A, C, D}, B};
}

FourPointWitness four_point_failure() { return {A, B, C, E}; }

bool same_side(Vertex origin, Vertex x, Vertex y) {
  return between5(origin, x, y) || between5(origin, y, x);
}

bool opposite_sides(Vertex origin, Vertex x, Vertex y) { return between5(x, origin, y); }

HalfLineWitness half_line_failure() {
  // C~B and B~D on the same side of A, yet (CAD).
  return {A, C, B, D};
}

std::vector<Vertex> Partition::first() const {
  std::vector<Vertex> out;
  for (int i = 0; i < 5; ++i) {
    if (mask & (1U << i)) out.emplace_back(i);
  }
  return out;
}

std::vector<Vertex> Partition::second() const {
  std::vector<Vertex> out;
  for (int i = 0; i < 5; ++i) {
    if (!(mask & (1U << i))) out.emplace_back(i);
  }
  return out;
}

namespace {

bool separates(const std::vector<Vertex>& inner, const std::vector<Vertex>& outer) {
  for (Vertex y : inner) {
    for (Vertex x : outer) {
      for (Vertex z : outer) {
        if (between5(x, y, z)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_cut(const Partition& p) {
  const auto first = p.first();
  const auto second = p.second();
  return !separates(first, second) && !separates(second, first);
}

std::vector<Partition> dedekind_cuts() {
  std::vector<Partition> out;
  for (unsigned m = 1; m < 31; ++m) {
    Partition p{static_cast<std::uint8_t>(m)};
    if (is_cut(p)) out.push_back(p);
  }
  return out;
}

bool strictly_contains(const Segment5& t, const Segment5& s) {
  const auto inner = s.closed_set();
  const bool subset = std::all_of(inner.begin(), inner.end(), [&](Vertex v) { return t.contains(v); });
  const auto outer = t.closed_set();
  const bool reverse = std::all_of(outer.begin(), outer.end(), [&](Vertex v) { return s.contains(v); });
  return subset && !reverse;
}

std::optional<std::pair<Segment5, Segment5>> archimedes_cover(const Segment5& s) {
  const SegmentClass other = s.cls == SegmentClass::Small ? SegmentClass::Large : SegmentClass::Small;
  const auto segs = all_segments();
  for (const auto& u : segs) {
    if (u.cls != other) continue;
    for (const auto& v : segs) {
      if (v.cls != other) continue;
      const auto pts = s.closed_set();
      if (std::all_of(pts.begin(), pts.end(),
                      [&](Vertex p) { return u.contains(p) || v.contains(p); })) {
        return std::make_pair(u, v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace nonpasch::pentaline
