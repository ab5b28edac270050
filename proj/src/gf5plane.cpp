#include "nonpasch/gf5plane.hpp"

#include "nonpasch/errors.hpp"

namespace nonpasch::gf5plane {

namespace {

int mod5(int v) { return ((v % 5) + 5) % 5; }

int inv5(int v) {
  for (int k = 1; k < 5; ++k) {
    if (mod5(v * k) == 1) return k;
  }
  throw Error(ErrorCode::DivisionByZero, "zero has no inverse in GF(5)");
}

}  // namespace

std::string_view to_string(Relation r) { return r == Relation::Mid ? "mid" : "comp"; }

bool FLine::contains(const FPoint& p) const { return mod5(a * p.x + b * p.y - c) == 0; }

std::array<FPoint, 5> FLine::points() const {
  std::array<FPoint, 5> out;
  std::size_t n = 0;
  for (const auto& p : all_points()) {
    if (contains(p)) out[n++] = p;
  }
  return out;
}

const std::vector<FPoint>& all_points() {
  static const std::vector<FPoint> pts = [] {
    std::vector<FPoint> v;
    for (int i = 0; i < 25; ++i) v.push_back(FPoint::from_index(i));
    return v;
  }();
  return pts;
}

const std::vector<FLine>& all_lines() {
  static const std::vector<FLine> lines = [] {
    std::vector<FLine> v;
    for (int c = 0; c < 5; ++c) v.push_back({0, 1, c});
    for (int b = 0; b < 5; ++b) {
      for (int c = 0; c < 5; ++c) v.push_back({1, b, c});
    }
    return v;
  }();
  return lines;
}

FLine make_line(int a, int b, int c) {
  a = mod5(a);
  b = mod5(b);
  c = mod5(c);
  if (a == 0 && b == 0) throw Error(ErrorCode::Degenerate, "line with a = b = 0");
  const int k = inv5(a != 0 ? a : b);
  return {mod5(a * k), mod5(b * k), mod5(c * k)};
}

FLine line_through(const FPoint& p, const FPoint& q) {
  if (p == q) throw Error(ErrorCode::SamePoint, "line through a single point");
  // Normal to the direction (dx, dy) is (dy, -dx).
  const int a = q.y - p.y;
  const int b = p.x - q.x;
  return make_line(a, b, a * p.x + b * p.y);
}

bool collinear(const FPoint& p, const FPoint& q, const FPoint& r) {
  return mod5((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)) == 0;
}

bool between_mid(const FPoint& y, const FPoint& x, const FPoint& z) {
  if (y == x || x == z || y == z) return false;
  return mod5(y.x + z.x - 2 * x.x) == 0 && mod5(y.y + z.y - 2 * x.y) == 0;
}

bool between_comp(const FPoint& y, const FPoint& x, const FPoint& z) {
  if (y == x || x == z || y == z || !collinear(y, x, z)) return false;
  return !between_mid(y, x, z);
}

bool between(Relation rel, const FPoint& y, const FPoint& x, const FPoint& z) {
  return rel == Relation::Mid ? between_mid(y, x, z) : between_comp(y, x, z);
}

int triple_between_count(Relation rel, const std::array<FPoint, 3>& t) {
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
    throw Error(ErrorCode::NotDistinct, "triple has repeated points");
  }
  if (!collinear(t[0], t[1], t[2])) throw Error(ErrorCode::NotCollinear, "triple is not collinear");
  return static_cast<int>(between(rel, t[1], t[0], t[2])) +
         static_cast<int>(between(rel, t[0], t[1], t[2])) +
         static_cast<int>(between(rel, t[0], t[2], t[1]));
}

}  // namespace nonpasch::gf5plane
