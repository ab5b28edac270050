#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "nonpasch/errors.hpp"
#include "nonpasch/literals.hpp"
#include "nonpasch/prism.hpp"
#include "support.hpp"

using namespace nonpasch::prism;
using nonpasch::Error;
using nonpasch::ErrorCode;
using nonpasch::Qs5;
using nonpasch::pentaline::A;
using nonpasch::pentaline::B;
using nonpasch::pentaline::C;
using nonpasch::pentaline::D;
using nonpasch::pentaline::E;
using testing_support::Gen;

namespace {

// Oracle: recover the plane z = alpha x + beta y from the heights over A and
// B, then evaluate it at the pentagon vertices in floating point.
std::array<double, 5> plane_heights(double h0, double h1) {
  const double c = std::cos(2 * M_PI / 5), s = std::sin(2 * M_PI / 5);
  const double alpha = h0, beta = (h1 - alpha * c) / s;
  std::array<double, 5> out{};
  for (int k = 0; k < 5; ++k) {
    out[static_cast<std::size_t>(k)] =
        alpha * std::cos(2 * M_PI * k / 5) + beta * std::sin(2 * M_PI * k / 5);
  }
  return out;
}

/// Pairwise-meeting triple: three sides of a random triangle.
std::array<PrismLine, 3> random_triangle(Gen& g) {
  for (;;) {
    const PrismPoint p = g.prism_point(), q = g.prism_point(), r = g.prism_point();
    if (p == q || q == r || p == r || collinear(p, q, r)) continue;
    return {line_through(p, q), line_through(q, r), line_through(r, p)};
  }
}

}  // namespace

TEST(Prism, HeightsFollowThePlane) {
  Gen g(21);
  for (int i = 0; i < 300; ++i) {
    const auto l = g.harmonic();
    const auto exact = heights_of(l);
    const auto expect = plane_heights(exact[0].to_double(), exact[1].to_double());
    for (int k = 0; k < 5; ++k) {
      EXPECT_NEAR(exact[static_cast<std::size_t>(k)].to_double(), expect[static_cast<std::size_t>(k)],
                  1e-9);
    }
  }
}

TEST(Prism, RecurrenceIsFivePeriodic) {
  Gen g(22);
  for (int i = 0; i < 200; ++i) {
    const Qs5 h0 = g.qs5(), h1 = g.qs5();
    EXPECT_EQ(run_recurrence(h0, h1, 5), h0);
    EXPECT_EQ(run_recurrence(h0, h1, 6), h1);
    const auto hs = heights_of(Harmonic{h0, h1});
    for (int k = 0; k < 5; ++k) {
      EXPECT_EQ(run_recurrence(h0, h1, k), hs[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(Prism, CoefficientRows) {
  const Qs5 p = Qs5::phi_prime();
  const auto& rows = coefficient_rows();
  EXPECT_EQ(rows[2][0], Qs5(-1));
  EXPECT_EQ(rows[2][1], p);
  EXPECT_EQ(rows[3][0], -p);
  EXPECT_EQ(rows[3][1], -p);
  EXPECT_EQ(rows[4][0], p);
  EXPECT_EQ(rows[4][1], Qs5(-1));
}

TEST(Prism, LineThroughTwoPointsIsUnique) {
  Gen g(23);
  for (int i = 0; i < 1000; ++i) {
    const PrismPoint p = g.prism_point(), q = g.prism_point();
    if (p == q) continue;
    const PrismLine l = line_through(p, q);
    EXPECT_TRUE(incident(p, l));
    EXPECT_TRUE(incident(q, l));
    // Any other line through p misses q.
    const PrismLine other = g.prism_line();
    if (other != l && incident(p, other)) {
      EXPECT_FALSE(incident(q, other));
    }
  }
  EXPECT_THROW(line_through(PrismPoint{A, 1}, PrismPoint{A, 1}), Error);
}

TEST(Prism, HarmonicPairsAgreeAtMostOnce) {
  Gen g(24);
  for (int i = 0; i < 1000; ++i) {
    const auto l = g.harmonic(), m = g.harmonic();
    if (l == m) continue;
    const int n = agreement_count(l.as_harmonic(), m.as_harmonic());
    EXPECT_LE(n, 1);
    EXPECT_EQ(intersect(l, m).has_value(), n == 1);
  }
  // Lines through a common point do agree once.
  for (int i = 0; i < 200; ++i) {
    const PrismPoint x = g.prism_point();
    const PrismPoint y{nonpasch::pentaline::Vertex((x.vertex.index() + 1) % 5), g.qs5()};
    const PrismPoint z{nonpasch::pentaline::Vertex((x.vertex.index() + 2) % 5), g.qs5()};
    const auto l = line_through(x, y), m = line_through(x, z);
    if (l == m) continue;
    EXPECT_EQ(intersect(l, m), x);
  }
}

TEST(Prism, IntersectRules) {
  EXPECT_FALSE(intersect(Vertical{A}, Vertical{B}).has_value());
  const PrismLine h = Harmonic{Qs5(1), Qs5(2)};
  EXPECT_EQ(intersect(Vertical{B}, h), (PrismPoint{B, 2}));
  try {
    intersect(h, h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameLine);
  }
}

TEST(Prism, BetweennessOnBothKindsOfLine) {
  EXPECT_TRUE(between3(PrismPoint{A, 0}, PrismPoint{A, 1}, PrismPoint{A, 5}));
  EXPECT_FALSE(between3(PrismPoint{A, 0}, PrismPoint{A, 5}, PrismPoint{A, 1}));
  EXPECT_TRUE(between3(PrismPoint{A, 0}, PrismPoint{B, 0}, PrismPoint{C, 0}));
  EXPECT_FALSE(between3(PrismPoint{A, 0}, PrismPoint{B, 0}, PrismPoint{E, 0}));
  EXPECT_THROW(between3(PrismPoint{A, 0}, PrismPoint{A, 0}, PrismPoint{B, 0}), Error);
  EXPECT_THROW(between3(PrismPoint{A, 0}, PrismPoint{B, 1}, PrismPoint{C, 0}), Error);
  EXPECT_FALSE(between(PrismPoint{A, 0}, PrismPoint{B, 1}, PrismPoint{C, 0}));
}

TEST(Prism, BetweennessAxiomsOnSampledTriples) {
  Gen g(25);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const PrismLine l = g.prism_line();
    std::vector<PrismPoint> pts;
    if (l.is_vertical()) {
      while (pts.size() < 3) {
        PrismPoint p{l.as_vertical().vertex, g.qs5()};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
      }
    } else {
      const auto hs = heights_of(l);
      std::set<int> ks;
      while (ks.size() < 3) ks.insert(static_cast<int>(g.integer(0, 4)));
      for (int k : ks) pts.push_back({nonpasch::pentaline::Vertex(k), hs[static_cast<std::size_t>(k)]});
    }
    const auto &p = pts[0], &q = pts[1], &r = pts[2];
    EXPECT_EQ(between(p, q, r), between(r, q, p));
    const int n = int(between(q, p, r)) + int(between(p, q, r)) + int(between(p, r, q));
    EXPECT_EQ(n, 1);
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Prism, TransversalOnSampledTriples) {
  Gen g(26);
  for (int i = 0; i < 500; ++i) {
    const auto t = random_triangle(g);
    const Transversal tr = transversal_for(t[0], t[1], t[2]);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NE(tr.line, t[static_cast<std::size_t>(k)]);
      EXPECT_TRUE(incident(tr.points[static_cast<std::size_t>(k)], tr.line));
      EXPECT_TRUE(incident(tr.points[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k)]));
    }
    EXPECT_NE(tr.points[0], tr.points[1]);
    EXPECT_NE(tr.points[1], tr.points[2]);
    EXPECT_NE(tr.points[0], tr.points[2]);
  }
}

TEST(Prism, TransversalOfThreeVerticalsIsTheBaseLine) {
  const Transversal tr = transversal_for(Vertical{A}, Vertical{B}, Vertical{C});
  EXPECT_EQ(tr.line, base_line());
  EXPECT_EQ(tr.points[0], (PrismPoint{A, 0}));
  EXPECT_EQ(tr.points[1], (PrismPoint{B, 0}));
  EXPECT_EQ(tr.points[2], (PrismPoint{C, 0}));
}

TEST(Prism, TransversalErrors) {
  const PrismLine h = Harmonic{Qs5(0), Qs5(1)};
  try {
    transversal_for(h, h, Vertical{A});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameLine);
  }
  // Two harmonic lines with no common height.
  const PrismLine k = Harmonic{Qs5(1), Qs5(2)};
  const PrismLine m = Harmonic{Qs5(1) + Qs5(10), Qs5(2) + Qs5(10)};
  ASSERT_FALSE(intersect(k, m).has_value());
  try {
    transversal_for(k, m, Vertical{A});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPairwiseIntersecting);
  }
}

TEST(Prism, WeakPaschCounterexample) {
  const auto w = pasch_star_witness();
  EXPECT_TRUE(verify(w));
  const Qs5 p = Qs5::phi_prime();
  EXPECT_EQ(w.l1, PrismLine(Harmonic{Qs5(0), Qs5(1)}));
  EXPECT_EQ(w.l2, PrismLine(Harmonic{Qs5(0), Qs5(2)}));
  EXPECT_EQ(w.l3, PrismLine(Harmonic{p, Qs5(2)}));
  EXPECT_EQ(heights_of(w.l1), (std::array<Qs5, 5>{Qs5(0), Qs5(1), p, -p, Qs5(-1)}));
  EXPECT_EQ(heights_of(w.l3), (std::array<Qs5, 5>{p, Qs5(2), p, Qs5(-1) - p, Qs5(-1) - p}));
  EXPECT_EQ(w.p, (PrismPoint{A, 0}));
  EXPECT_EQ(w.q, (PrismPoint{B, 2}));
  EXPECT_EQ(w.r, (PrismPoint{C, p}));
  EXPECT_EQ(w.d, PrismLine(Vertical{D}));
  EXPECT_EQ(w.d_on_pq, (PrismPoint{D, Qs5(-2) * p}));
  EXPECT_EQ(w.x_d, (PrismPoint{D, -p}));
  EXPECT_EQ(w.z_d, (PrismPoint{D, Qs5(-1) - p}));
  EXPECT_EQ(w.closed_pq, (std::array{A, B, D}));
  EXPECT_EQ(w.closed_qr, (std::array{B, C, E}));
  EXPECT_EQ(w.closed_pr, (std::array{A, C, B}));
  // d meets the two other side lines outside the closed sides.
  EXPECT_FALSE(between(w.p, w.x_d, w.r));
  EXPECT_FALSE(between(w.q, w.z_d, w.r));
  EXPECT_TRUE(between(w.p, w.d_on_pq, w.q));
}

TEST(Prism, ParallelsThroughAnExternalPoint) {
  const auto uniq = parallels_through(PrismPoint{B, 3}, Vertical{A});
  ASSERT_TRUE(std::holds_alternative<UniqueParallel>(uniq));
  EXPECT_EQ(std::get<UniqueParallel>(uniq).line, PrismLine(Vertical{B}));

  Gen g(27);
  for (int i = 0; i < 50; ++i) {
    const PrismLine l = g.harmonic();
    PrismPoint x = g.prism_point();
    if (incident(x, l)) continue;
    const auto cls = parallels_through(x, l);
    ASSERT_TRUE(std::holds_alternative<FinitelyManyMeet>(cls));
    const auto& f = std::get<FinitelyManyMeet>(cls);
    EXPECT_LE(f.meeting.size(), 5u);
    for (const auto& m : f.meeting) {
      EXPECT_TRUE(incident(x, m));
      EXPECT_TRUE(intersect(m, l).has_value());
    }
    EXPECT_GE(f.sample_parallels.size(), 100u);
    for (const auto& m : f.sample_parallels) {
      EXPECT_TRUE(incident(x, m));
      EXPECT_FALSE(intersect(m, l).has_value());
    }
  }
  EXPECT_THROW(parallels_through(PrismPoint{A, 0}, base_line()), Error);
}

TEST(Prism, SamplerIsDeterministic) {
  nonpasch::Stream s1(42), s2(42);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(sample_point(s1), sample_point(s2));
    EXPECT_EQ(sample_line(s1), sample_line(s2));
  }
}

TEST(Prism, SamplerGoldenValuesForSeed42) {
  // Pinned so that a change to the stream or the sampler shows up here.
  nonpasch::Stream s(42);
  EXPECT_EQ(nonpasch::literals::format(sample_point(s)), "point:B,-12-5*s5");
  EXPECT_EQ(nonpasch::literals::format(sample_point(s)), "point:D,-7/3+2*s5");
  EXPECT_EQ(nonpasch::literals::format(sample_point(s)), "point:D,10/3+7/4*s5");
  EXPECT_EQ(nonpasch::Stream(42).next(), 2576493707698874361ULL);
}
