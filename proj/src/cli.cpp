#include "nonpasch/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nonpasch/angles.hpp"
#include "nonpasch/engine/structure.hpp"
#include "nonpasch/errors.hpp"
#include "nonpasch/literals.hpp"
#include "nonpasch/pentaline.hpp"
#include "nonpasch/prism.hpp"
#include "nonpasch/punctured.hpp"

namespace nonpasch::cli {

namespace {

using engine::AxiomId;
using engine::AxiomReport;
using engine::Json;
using engine::ModelId;
using engine::Status;
using engine::Strategy;

/// Raised for anything that should end the run with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string axioms;
  std::string strategy;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::string json;
  std::string expect;
  bool timing = false;
  std::string target;
  std::vector<std::string> lines;
};

ModelId model_of(const std::string& name) {
  if (auto m = engine::parse_model(name)) return *m;
  throw UsageError("unknown model '" + name +
                   "' (expected pentaline, prism, gf5-mid, gf5-comp or punctured)");
}

std::vector<AxiomId> axioms_of(const std::string& list) {
  std::vector<AxiomId> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string token = list.substr(pos, comma - pos);
    auto a = engine::parse_axiom(token);
    if (!a) {
      throw UsageError("unknown axiom '" + token + "' at position " + std::to_string(pos) +
                       " of --axioms");
    }
    out.push_back(*a);
    pos = comma + 1;
  }
  return out;
}

Strategy strategy_of(const Options& o, const engine::Structure& s) {
  if (o.strategy.empty()) return engine::default_strategy(s, o.seed, o.samples);
  if (o.strategy == "sampled") return Strategy::sampled(o.seed, o.samples);
  if (o.strategy == "exhaustive") {
    if (!s.capabilities().enumerable) {
      throw UsageError("model '" + std::string(to_string(s.model())) +
                       "' is infinite; use --strategy sampled");
    }
    return Strategy::exhaustive();
  }
  throw UsageError("unknown strategy '" + o.strategy + "' (expected exhaustive or sampled)");
}

std::string describe(const Strategy& s) {
  if (s.kind == Strategy::Kind::Exhaustive) return "exhaustive";
  return "sampled, seed " + std::to_string(s.seed) + ", " + std::to_string(s.samples) + " samples";
}

void print_text(const std::vector<AxiomReport>& reports, std::ostream& out, bool timing) {
  for (const auto& r : reports) {
    out << std::left << std::setw(10) << to_string(r.axiom) << to_string(r.status);
    if (timing) out << "  (" << std::fixed << std::setprecision(2) << r.elapsed_ms << " ms)";
    out << '\n';
    if (r.status == Status::Unsupported) out << "    reason: " << r.reason << '\n';
    if (r.witness) {
      if (!r.witness->points.empty()) {
        out << "    points:";
        for (const auto& p : r.witness->points) out << ' ' << p;
        out << '\n';
      }
      if (!r.witness->lines.empty()) {
        out << "    lines:";
        for (const auto& l : r.witness->lines) out << ' ' << l;
        out << '\n';
      }
      out << "    violation: " << r.witness->violation << '\n';
    }
  }
}

/// Writes `j` to `dest` ("-" is `out`).
void emit_json(const Json& j, const std::string& dest, std::ostream& out) {
  if (dest == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(dest);
  if (!file) throw UsageError("cannot write '" + dest + "'");
  file << j.dump(2) << '\n';
}

/// Compares reports against a JSON list of {"axiom", "status"}; returns the
/// number of mismatches and describes each on `err`.
int check_expectations(const std::string& path, const std::vector<AxiomReport>& reports,
                       std::ostream& err) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read expectation file '" + path + "'");
  Json expected;
  try {
    expected = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw UsageError("expectation file '" + path + "': " + e.what());
  }
  if (!expected.is_array()) throw UsageError("expectation file '" + path + "' must hold a list");
  int mismatches = 0;
  for (const auto& entry : expected) {
    const auto name = entry.value("axiom", std::string());
    const auto want = entry.value("status", std::string());
    const auto axiom = engine::parse_axiom(name);
    if (!axiom) throw UsageError("expectation file: unknown axiom '" + name + "'");
    if (!engine::parse_status(want)) throw UsageError("expectation file: unknown status '" + want + "'");
    const auto it = std::find_if(reports.begin(), reports.end(),
                                 [&](const AxiomReport& r) { return r.axiom == *axiom; });
    if (it == reports.end()) {
      err << "expectation: " << name << " was not checked\n";
      ++mismatches;
    } else if (to_string(it->status) != want) {
      err << "expectation: " << name << " expected " << want << ", got " << to_string(it->status)
          << '\n';
      ++mismatches;
    }
  }
  return mismatches;
}

int run_checks(const Options& o, bool whole_suite, std::ostream& out, std::ostream& err) {
  const auto s = engine::make_structure(model_of(o.model));
  std::vector<AxiomId> axioms;
  if (!o.axioms.empty()) {
    axioms = axioms_of(o.axioms);
  } else if (whole_suite) {
    axioms = s->default_suite();
  } else {
    throw UsageError("check needs --axioms");
  }
  for (AxiomId a : axioms) {
    if (!s->applicable(a)) {
      throw UsageError(std::string(to_string(a)) + " does not apply to model '" + o.model + "'");
    }
  }
  const Strategy strat = strategy_of(o, *s);
  const auto reports = engine::run_suite(s, axioms, strat);

  if (o.json != "-") {
    out << "model " << o.model << ", " << describe(strat) << '\n';
    print_text(reports, out, o.timing);
  }
  if (!o.json.empty()) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(engine::to_json(r, o.timing));
    emit_json(list, o.json, out);
  }
  if (!o.expect.empty() && check_expectations(o.expect, reports, err) > 0) {
    return kExpectationMismatch;
  }
  return kOk;
}

Json prism_pasch_json() {
  using literals::format;
  const auto w = prism::pasch_star_witness();
  auto letters = [](const std::array<pentaline::Vertex, 3>& vs) {
    std::string s;
    for (auto v : vs) s += v.letter();
    return s;
  };
  Json j;
  j["model"] = "prism";
  j["target"] = "pasch";
  j["lines"] = {{"l1", format(w.l1)}, {"l2", format(w.l2)}, {"l3", format(w.l3)}};
  j["points"] = {{"P", format(w.p)}, {"Q", format(w.q)}, {"R", format(w.r)}};
  j["d"] = format(w.d);
  j["d_on_pq"] = format(w.d_on_pq);
  j["d_meets_l1"] = format(w.x_d);
  j["d_meets_l3"] = format(w.z_d);
  j["closed_sides"] = {{"PQ", letters(w.closed_pq)},
                       {"QR", letters(w.closed_qr)},
                       {"PR", letters(w.closed_pr)}};
  j["verified"] = prism::verify(w);
  return j;
}

Json punctured_pasch_json() {
  using literals::format;
  const auto w = punctured::q_pasch_witness();
  Json j;
  j["model"] = "punctured";
  j["target"] = "pasch";
  j["points"] = {{"A", format(w.a)}, {"B", format(w.b)}, {"C", format(w.c)}};
  j["line"] = format(w.line);
  j["d"] = format(w.d);
  j["meets_ac"] = nullptr;
  j["meets_bc"] = nullptr;
  j["verified"] = punctured::verify(w);
  return j;
}

int run_counterexample(const Options& o, std::ostream& out) {
  const ModelId m = model_of(o.model);
  Json j;
  if (o.target == "pasch" && m == ModelId::Prism) {
    j = prism_pasch_json();
  } else if (o.target == "pasch" && m == ModelId::Punctured) {
    j = punctured_pasch_json();
  } else {
    AxiomId a = AxiomId::B4;
    if (o.target == "t2") a = AxiomId::T2;
    if (o.target == "t3") a = AxiomId::T3;
    if (o.target == "t4") a = AxiomId::T4;
    const auto s = engine::make_structure(m);
    if (!s->applicable(a)) {
      throw UsageError("target '" + o.target + "' does not apply to model '" + o.model + "'");
    }
    const auto r = s->check(a, strategy_of(o, *s));
    j["model"] = o.model;
    j["target"] = o.target;
    j["axiom"] = to_string(a);
    j["status"] = to_string(r.status);
    j["witness"] = r.witness ? engine::to_json(*r.witness) : Json(nullptr);
  }
  emit_json(j, o.json.empty() ? "-" : o.json, out);
  return kOk;
}

int run_angles(const Options& o, std::ostream& out) {
  if (o.lines.size() != 3) throw UsageError("angles needs exactly three --lines");
  std::array<prism::PrismLine, 3> ls{literals::parse_prism_line(o.lines[0]),
                                     literals::parse_prism_line(o.lines[1]),
                                     literals::parse_prism_line(o.lines[2])};
  Json j;
  j["lines"] = o.lines;
  Json pairs = Json::array();
  for (auto [i, k] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    const auto ap = angles::angle_pair(ls[static_cast<std::size_t>(i)], ls[static_cast<std::size_t>(k)]);
    pairs.push_back({{"lines", {i + 1, k + 1}}, {"theta", ap.theta}, {"complement", ap.complement}});
  }
  j["pairs"] = pairs;
  try {
    const auto t = angles::triangle_of(ls[0], ls[1], ls[2]);
    const auto ta = angles::triangle_angles(t);
    j["vertices"] = {literals::format(t.p), literals::format(t.q), literals::format(t.r)};
    j["angles"] = ta.at;
    j["sum"] = ta.sum;
    j["excess"] = ta.excess;
  } catch (const Error& e) {
    j["vertices"] = nullptr;
    j["angles"] = nullptr;
    j["sum"] = nullptr;
    j["excess"] = nullptr;
    j["note"] = e.what();
  }
  emit_json(j, o.json.empty() ? "-" : o.json, out);
  return kOk;
}

int run_table(const Options& o, std::ostream& out) {
  if (!o.model.empty() && o.model != "pentaline") {
    throw UsageError("table is available for the pentaline model only");
  }
  Json rows = Json::array();
  std::ostringstream text;
  text << "triple  between  relation\n";
  const auto vs = pentaline::all_vertices();
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      for (int k = j + 1; k < 5; ++k) {
        const auto a = vs[static_cast<std::size_t>(i)];
        const auto b = vs[static_cast<std::size_t>(j)];
        const auto c = vs[static_cast<std::size_t>(k)];
        const auto apex = pentaline::apex_of(a, b, c);
        std::string ends;
        for (auto v : {a, b, c}) {
          if (v != apex) ends += v.letter();
        }
        const std::string triple{a.letter(), b.letter(), c.letter()};
        const std::string rel = std::string("(") + ends[0] + apex.letter() + ends[1] + ")";
        text << triple << "     " << apex.letter() << "        " << rel << '\n';
        rows.push_back({{"triple", triple}, {"between", std::string(1, apex.letter())},
                        {"relation", rel}});
      }
    }
  }
  if (o.json.empty()) {
    out << text.str();
  } else {
    emit_json(rows, o.json, out);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks order axioms on non-Pasch model geometries", "nonpasch"};
  app.require_subcommand(1);
  Options o;

  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "pentaline, prism, gf5-mid, gf5-comp or punctured")
        ->required();
    sub->add_option("--strategy", o.strategy, "exhaustive or sampled (default by model)");
    sub->add_option("--seed", o.seed, "master seed for sampling");
    sub->add_option("--samples", o.samples, "instances per sampled check")
        ->check(CLI::PositiveNumber);
    sub->add_option("--json", o.json, "write JSON to a file, or '-' for stdout");
  };

  auto* check = app.add_subcommand("check", "check selected axioms");
  add_run_options(check);
  check->add_option("--axioms", o.axioms, "comma-separated axiom names")->required();
  check->add_option("--expect", o.expect, "JSON list of {axiom, status} to compare against");
  check->add_flag("--timing", o.timing, "report elapsed time per check");

  auto* suite = app.add_subcommand("suite", "check the model's default axiom suite");
  add_run_options(suite);
  suite->add_option("--axioms", o.axioms, "override the default suite");
  suite->add_option("--expect", o.expect, "JSON list of {axiom, status} to compare against");
  suite->add_flag("--timing", o.timing, "report elapsed time per check");

  auto* cex = app.add_subcommand("counterexample", "print a canonical counterexample");
  add_run_options(cex);
  cex->add_option("--target", o.target, "pasch, t2, t3 or t4")
      ->required()
      ->check(CLI::IsMember({"pasch", "t2", "t3", "t4"}));

  auto* ang = app.add_subcommand("angles", "angle pairs and angle sum of three prism lines");
  ang->add_option("--lines", o.lines, "three line literals")->required()->expected(3);
  ang->add_option("--json", o.json, "write JSON to a file, or '-' for stdout");

  auto* table = app.add_subcommand("table", "the betweenness table of the five-point line");
  table->add_option("--model", o.model, "pentaline");
  table->add_option("--json", o.json, "write JSON to a file, or '-' for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return run_checks(o, false, out, err);
    if (suite->parsed()) return run_checks(o, true, out, err);
    if (cex->parsed()) return run_counterexample(o, out);
    if (ang->parsed()) return run_angles(o, out);
    return run_table(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace nonpasch::cli
