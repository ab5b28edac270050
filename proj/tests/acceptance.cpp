// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "nonpasch/angles.hpp"
#include "nonpasch/cli.hpp"
#include "nonpasch/engine/structure.hpp"
#include "nonpasch/errors.hpp"
#include "nonpasch/gf5plane.hpp"
#include "nonpasch/pentaline.hpp"
#include "nonpasch/prism.hpp"
#include "nonpasch/punctured.hpp"

namespace {

using namespace nonpasch;
using engine::AxiomId;
using engine::Status;
using engine::Strategy;

constexpr double kRuntimeLimitMs = 1000.0;
constexpr double kAngleTol = 1e-12;
constexpr double kExcessMargin = 1e-9;
constexpr double kGirardTol = 1e-9;

/// Collects the reasons a criterion fails; empty means pass.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  bool passed() const { return problems_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& p : problems_) s += (s.empty() ? "" : "; ") + p;
    return s;
  }

 private:
  std::vector<std::string> problems_;
};

double elapsed_ms(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Status status_of(const std::vector<engine::AxiomReport>& reports, AxiomId a) {
  for (const auto& r : reports) {
    if (r.axiom == a) return r.status;
  }
  return Status::Unsupported;
}

const engine::AxiomReport* report_of(const std::vector<engine::AxiomReport>& reports, AxiomId a) {
  for (const auto& r : reports) {
    if (r.axiom == a) return &r;
  }
  return nullptr;
}

void pentaline_suite(Check& c) {
  using namespace pentaline;
  const auto s = engine::make_structure(engine::ModelId::Pentaline);
  std::vector<engine::AxiomReport> reports;
  const double ms =
      elapsed_ms([&] { reports = engine::run_suite(s, s->default_suite(), Strategy::exhaustive()); });
  for (AxiomId a : {AxiomId::B1, AxiomId::B2, AxiomId::B3, AxiomId::T1, AxiomId::Cantor5,
                    AxiomId::Arch5, AxiomId::Dedekind5}) {
    c.require(status_of(reports, a) == Status::Holds, std::string(to_string(a)) + " not Holds");
  }
  for (AxiomId a : {AxiomId::T2, AxiomId::T3, AxiomId::T4}) {
    const auto* r = report_of(reports, a);
    c.require(r && r->status == Status::Fails && r->witness && s->replay(a, *r->witness),
              std::string(to_string(a)) + " lacks a replayable failure");
  }
  const auto* t3 = report_of(reports, AxiomId::T3);
  c.require(t3 && t3->witness && t3->witness->points == std::vector<std::string>{"A", "B", "C", "E"},
            "T3 witness is not A B C E");
  c.require(between5(A, B, C) && between5(A, C, E) && !between5(A, B, E) && between5(E, A, B),
            "T3 witness relations");
  c.require(ms < kRuntimeLimitMs, "runtime " + std::to_string(ms) + " ms");
}

void triple_table(Check& c) {
  using namespace pentaline;
  c.require(between5(A, B, C), "(ABC)");
  c.require(between5(C, A, D), "(CAD)");
  c.require(between5(A, C, E), "(ACE)");
  c.require(between5(E, A, B), "(EAB)");
  c.require(!between5(A, B, E), "not (ABE)");
}

void non_orderability(Check& c) {
  const auto r = pentaline::no_linear_order_witness();
  c.require(r.orders_searched == 120 && r.inducing_orders == 0, "full search");
  c.require(r.restricted_searched == 24 && r.restricted_satisfying == 0, "restricted search");
}

void gf3_lengths(Check& c) {
  using namespace pentaline;
  const auto segs = all_segments();
  c.require(segs.size() == 10, "segment count");
  int valid = 0, invalid_sharing = 0;
  for (const auto& s : segs) {
    for (const auto& t : segs) {
      if (s == t) continue;
      const bool share = s.has_endpoint(t.end1) || s.has_endpoint(t.end2);
      try {
        const Segment5 u = union_segments(s, t);
        ++valid;
        c.require(segment_length(u) == segment_length(s) + segment_length(t),
                  "additivity fails on a valid union");
        c.require(share && s.cls == t.cls, "valid union of mixed classes or without a shared end");
      } catch (const Error&) {
        if (share) {
          ++invalid_sharing;
          c.require(s.cls != t.cls, "invalid union of same-class segments sharing an endpoint");
        }
      }
    }
  }
  c.require(valid > 0 && invalid_sharing > 0, "degenerate union census");
}

void gf5_exhaustive(Check& c) {
  using namespace gf5plane;
  const auto mid = engine::make_structure(engine::ModelId::Gf5Mid);
  std::vector<engine::AxiomReport> reports;
  const double ms = elapsed_ms([&] {
    reports = engine::run_suite(mid,
                                {AxiomId::I1, AxiomId::I2, AxiomId::I3, AxiomId::I4, AxiomId::B1,
                                 AxiomId::B2, AxiomId::B3, AxiomId::B4},
                                Strategy::exhaustive());
  });
  for (AxiomId a : {AxiomId::I1, AxiomId::I2, AxiomId::I3, AxiomId::I4, AxiomId::B1, AxiomId::B2,
                    AxiomId::B3}) {
    c.require(status_of(reports, a) == Status::Holds, std::string(to_string(a)) + " not Holds");
  }
  const auto* b4 = report_of(reports, AxiomId::B4);
  c.require(b4 && b4->status == Status::Fails && b4->witness && mid->replay(AxiomId::B4, *b4->witness),
            "B4 lacks a replayable failure");
  for (const auto& l : all_lines()) {
    const auto p = l.points();
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        for (int k = j + 1; k < 5; ++k) {
          const std::array<FPoint, 3> t{p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)],
                                        p[static_cast<std::size_t>(k)]};
          c.require(triple_between_count(Relation::Mid, t) == 1, "mid count");
          c.require(triple_between_count(Relation::Comp, t) == 2, "comp count");
        }
      }
    }
  }
  c.require(ms < kRuntimeLimitMs, "runtime " + std::to_string(ms) + " ms");
}

void prism_sampled(Check& c) {
  const auto s = engine::make_structure(engine::ModelId::Prism);
  const auto main = engine::run_suite(
      s, {AxiomId::I1, AxiomId::I2, AxiomId::B1, AxiomId::B2, AxiomId::B3}, Strategy::sampled(42, 1000));
  for (const auto& r : main) {
    c.require(r.status == Status::HoldsOnSample, std::string(to_string(r.axiom)) + " failed");
  }
  const auto i4 = engine::check_axiom(s, AxiomId::I4, Strategy::sampled(42, 500));
  c.require(i4.status == Status::HoldsOnSample, "I4 transversal construction failed");

  Stream stream(42);
  for (int i = 0; i < 1000; ++i) {
    const prism::Harmonic l{prism::sample_qs5(stream), prism::sample_qs5(stream)};
    const prism::Harmonic m{prism::sample_qs5(stream), prism::sample_qs5(stream)};
    if (l == m) continue;
    const int n = prism::agreement_count(l, m);
    c.require(n == 0 || n == 1, "harmonic pair agrees " + std::to_string(n) + " times");
  }
}

void weak_pasch(Check& c) {
  using namespace pentaline;
  const auto w = prism::pasch_star_witness();
  c.require(prism::verify(w), "witness does not verify");
  c.require(w.closed_pq == std::array{A, B, D}, "cl(PQ)");
  c.require(w.closed_qr == std::array{B, C, E}, "cl(QR)");
  c.require(w.closed_pr == std::array{A, C, B}, "cl(PR)");
  c.require(w.d == prism::PrismLine(prism::Vertical{D}), "d");
  c.require(prism::incident(w.x_d, w.l1) && prism::incident(w.x_d, w.d), "d meets l1");
  c.require(prism::incident(w.z_d, w.l3) && prism::incident(w.z_d, w.d), "d meets l3");
  c.require(!prism::between(w.p, w.x_d, w.r) && w.x_d != w.p && w.x_d != w.r,
            "d meets l1 inside the closed side");
  c.require(!prism::between(w.q, w.z_d, w.r) && w.z_d != w.q && w.z_d != w.r,
            "d meets l3 inside the closed side");
  c.require(prism::between(w.p, w.d_on_pq, w.q), "d does not cross PQ");
}

void parallels(Check& c) {
  using namespace prism;
  Stream s(42);
  // Vertical l: only X's own vertical misses it; every harmonic line meets it.
  for (int i = 0; i < 20; ++i) {
    const PrismPoint x = sample_point(s);
    const Vertical lv{pentaline::Vertex((x.vertex.index() + 1 + static_cast<int>(s.uniform(0, 3))) % 5)};
    const auto cls = parallels_through(x, lv);
    const auto* u = std::get_if<UniqueParallel>(&cls);
    c.require(u && u->line == PrismLine(Vertical{x.vertex}) && !intersect(u->line, lv),
              "vertical case");
    for (int k = 0; k < 20; ++k) {
      const PrismPoint y{pentaline::Vertex((x.vertex.index() + 1 + static_cast<int>(s.uniform(0, 3))) % 5),
                         sample_qs5(s)};
      c.require(intersect(line_through(x, y), lv).has_value() || line_through(x, y) == PrismLine(lv),
                "a line through X misses the vertical");
    }
  }
  // Harmonic l: at most five meeting lines, at least 100 verified misses.
  int cases = 0;
  while (cases < 20) {
    const PrismLine l = Harmonic{sample_qs5(s), sample_qs5(s)};
    const PrismPoint x = sample_point(s);
    if (incident(x, l)) continue;
    ++cases;
    const auto cls = parallels_through(x, l);
    const auto* f = std::get_if<FinitelyManyMeet>(&cls);
    c.require(f != nullptr, "harmonic case classified as unique");
    if (!f) continue;
    c.require(f->meeting.size() <= 5, "more than five meeting lines");
    for (const auto& m : f->meeting) c.require(incident(x, m) && intersect(m, l).has_value(), "meeting line");
    std::vector<PrismLine> distinct;
    for (const auto& m : f->sample_parallels) {
      c.require(incident(x, m) && !intersect(m, l).has_value(), "parallel meets l");
      if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
    }
    c.require(distinct.size() >= 100, "fewer than 100 distinct parallels");
  }
}

void angles_check(Check& c) {
  using namespace prism;
  const auto ap = angles::angle_pair(base_line(), Vertical{pentaline::A});
  c.require(std::abs(ap.theta - M_PI / 2) <= kAngleTol && std::abs(ap.complement - M_PI / 2) <= kAngleTol,
            "base/vertical not orthogonal");
  Stream s(42);
  int pairs = 0;
  while (pairs < 1000) {
    const PrismLine l = sample_line(s), m = sample_line(s);
    if (l == m) continue;
    ++pairs;
    const auto a = angles::angle_pair(l, m);
    c.require(std::abs(a.theta + a.complement - M_PI) <= kAngleTol, "pair does not sum to pi");
  }
  int triangles = 0;
  while (triangles < 100) {
    const PrismPoint p = sample_point(s), q = sample_point(s), r = sample_point(s);
    if (p == q || q == r || p == r || collinear(p, q, r)) continue;
    try {
      const auto t = angles::triangle_of(line_through(r, p), line_through(p, q), line_through(q, r));
      const auto ta = angles::triangle_angles(t);
      ++triangles;
      c.require(ta.sum > M_PI + kExcessMargin, "angle sum not above pi");
      c.require(std::abs(ta.sum - M_PI - ta.area) <= kGirardTol, "Girard inconsistency");
    } catch (const Error&) {
      // Nearly coincident side planes are not valid triangles.
    }
  }
  const auto w = pasch_star_witness();
  const auto t = angles::triangle_of(w.l1, w.l2, w.l3);
  const angles::VertexWedges wedges{angles::WedgeChoice::Between, angles::WedgeChoice::Outside,
                                    angles::WedgeChoice::Between};
  for (int k = 0; k < 20; ++k) {
    const Rational h = Rational(BigInt(2 * k + 1), BigInt(8)) - Rational(1);
    const bool inside = Rational(1) < h && h < Rational(2);
    c.require(angles::triangle_interior_contains(PrismPoint{pentaline::B, Qs5(h)}, t, wedges) == inside,
              "interior on vertical B at height " + h.str());
  }
}

void punctured_pasch(Check& c) {
  using namespace punctured;
  const auto w = q_pasch_witness();
  c.require(verify(w), "witness does not verify");
  c.require(q_between(w.a, w.d, w.b) && q_incident(w.d, w.line), "(ADB)");
  const QLine ac = q_line_through(w.a, w.c);
  c.require(ac.a() * w.line.b() == w.line.a() * ac.b() && !q_intersect(w.line, ac), "a parallel to AC");
  const QLine bc = q_line_through(w.b, w.c);
  c.require(bc.passes_through_hole() && w.line.passes_through_hole() && !q_intersect(w.line, bc),
            "a meets BC only at the hole");
}

void determinism(Check& c) {
  const std::vector<std::string> args = {"suite", "--model", "prism", "--seed", "7", "--json", "-"};
  std::ostringstream o1, o2, e1, e2;
  const int c1 = cli::run_cli(args, o1, e1);
  const int c2 = cli::run_cli(args, o2, e2);
  c.require(c1 == 0 && c2 == 0, "non-zero exit");
  c.require(!o1.str().empty() && o1.str() == o2.str(), "outputs differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 pentaline exhaustive suite (B1-B3,T1,Cantor5,Arch5,Dedekind5 hold; T2-T4 fail; < 1 s)",
       pentaline_suite},
      {"2 triple table (ABC),(CAD),(ACE),(EAB) true; (ABE) false", triple_table},
      {"3 non-orderability: 0/120 orders, 0/24 restricted orders", non_orderability},
      {"4 GF(3) lengths additive; invalid unions = mixed classes sharing an endpoint", gf3_lengths},
      {"5 gf5 exhaustive (I1-I4,B1-B3 hold; counts 1 and 2; B4 fails; < 1 s)", gf5_exhaustive},
      {"6 prism sampled, seed 42 (I1,I2,I4,B1-B3; harmonic agreement in {0,1})", prism_sampled},
      {"7 B4* counterexample with closed sides ABD, BCE, ACB and d = vertical:D", weak_pasch},
      {"8 parallelism trichotomy", parallels},
      {"9 angles (orthogonality, pair sums, excess, Girard, interior on vertical B)", angles_check},
      {"10 punctured Pasch failure through the hole", punctured_pasch},
      {"11 determinism of `suite --model prism --seed 7 --json -`", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS  " : "FAIL  ") << name;
    if (!c.passed()) std::cout << "  [" << c.summary() << "]";
    std::cout << '\n';
    failed += !c.passed();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed;
}
