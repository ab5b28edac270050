#include <gtest/gtest.h>

#include <set>

#include "nonpasch/errors.hpp"
#include "nonpasch/gf5plane.hpp"

using namespace nonpasch::gf5plane;
using nonpasch::Error;

namespace {

int mod5(int v) { return ((v % 5) + 5) % 5; }

// Oracle: the parameter lambda with z = y + lambda (x - y) over GF(5).
std::optional<int> lambda(const FPoint& y, const FPoint& x, const FPoint& z) {
  for (int l = 0; l < 5; ++l) {
    if (mod5(y.x + l * (x.x - y.x)) == z.x && mod5(y.y + l * (x.y - y.y)) == z.y) return l;
  }
  return std::nullopt;
}

}  // namespace

TEST(Gf5Plane, Counts) {
  EXPECT_EQ(all_points().size(), 25u);
  EXPECT_EQ(all_lines().size(), 30u);
  for (const auto& l : all_lines()) {
    std::set<int> idx;
    for (const auto& p : l.points()) {
      EXPECT_TRUE(l.contains(p));
      idx.insert(p.index());
    }
    EXPECT_EQ(idx.size(), 5u);
  }
  EXPECT_TRUE(std::is_sorted(all_lines().begin(), all_lines().end()));
}

TEST(Gf5Plane, EveryPairOnExactlyOneLine) {
  for (const auto& p : all_points()) {
    for (const auto& q : all_points()) {
      if (p == q) continue;
      int n = 0;
      for (const auto& l : all_lines()) n += l.contains(p) && l.contains(q);
      EXPECT_EQ(n, 1);
      const FLine l = line_through(p, q);
      EXPECT_TRUE(l.contains(p) && l.contains(q));
    }
  }
  EXPECT_THROW(line_through(FPoint{1, 1}, FPoint{1, 1}), Error);
  EXPECT_THROW(make_line(0, 0, 1), Error);
  EXPECT_EQ(make_line(2, 4, 1), (FLine{1, 2, 3}));
}

TEST(Gf5Plane, MidpointMatchesLambdaOracle) {
  for (const auto& y : all_points()) {
    for (const auto& x : all_points()) {
      for (const auto& z : all_points()) {
        if (x == y || y == z || x == z || !collinear(y, x, z)) {
          EXPECT_FALSE(between_mid(y, x, z));
          EXPECT_FALSE(between_comp(y, x, z));
          continue;
        }
        // x is the midpoint of y and z iff z = y + 2 (x - y).
        const auto l = lambda(y, x, z);
        ASSERT_TRUE(l.has_value());
        EXPECT_EQ(between_mid(y, x, z), *l == 2);
        EXPECT_EQ(between_comp(y, x, z), *l != 2);
      }
    }
  }
}

TEST(Gf5Plane, PerTripleCounts) {
  for (const auto& l : all_lines()) {
    const auto pts = l.points();
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        for (int k = j + 1; k < 5; ++k) {
          const std::array<FPoint, 3> t{pts[static_cast<std::size_t>(i)],
                                        pts[static_cast<std::size_t>(j)],
                                        pts[static_cast<std::size_t>(k)]};
          EXPECT_EQ(triple_between_count(Relation::Mid, t), 1);
          EXPECT_EQ(triple_between_count(Relation::Comp, t), 2);
        }
      }
    }
  }
  EXPECT_THROW(triple_between_count(Relation::Mid, {FPoint{0, 0}, FPoint{1, 0}, FPoint{0, 1}}),
               Error);
}

TEST(Gf5Plane, RelationNames) {
  EXPECT_EQ(to_string(Relation::Mid), "mid");
  EXPECT_EQ(to_string(Relation::Comp), "comp");
}
