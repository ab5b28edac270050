#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nonpasch/cli.hpp"

using nonpasch::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, CheckGf5MidJson) {
  const CliRun r = run({"check", "--model", "gf5-mid", "--axioms", "B1,B2,B3", "--json", "-"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  for (const auto& rep : j) EXPECT_EQ(rep["status"], "Holds");
  EXPECT_EQ(j[0]["axiom"], "B1");
}

TEST(Cli, AxiomModelMismatchIsUsageError) {
  const CliRun r = run({"check", "--model", "prism", "--axioms", "Dedekind5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Dedekind5"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "--model", "cube", "--axioms", "B1"}).code, 2);
  EXPECT_EQ(run({"check", "--model", "prism", "--axioms", "B1", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"check", "--model", "prism", "--axioms", "B1", "--strategy", "exhaustive"}).code, 2);
  const CliRun bad = run({"check", "--model", "prism", "--axioms", "B1,B9"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("'B9' at position 3"), std::string::npos);
  const CliRun lit = run({"angles", "--lines", "vertical:F", "vertical:A", "vertical:B"});
  EXPECT_EQ(lit.code, 2);
  EXPECT_NE(lit.err.find("position 9"), std::string::npos);
  EXPECT_EQ(run({"table", "--model", "prism"}).code, 2);
  EXPECT_EQ(run({"counterexample", "--model", "pentaline", "--target", "pasch"}).code, 2);
}

TEST(Cli, PrismPaschCounterexample) {
  const CliRun r = run({"counterexample", "--model", "prism", "--target", "pasch"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d"], "vertical:D");
  EXPECT_EQ(j["closed_sides"]["PQ"], "ABD");
  EXPECT_EQ(j["closed_sides"]["QR"], "BCE");
  EXPECT_EQ(j["closed_sides"]["PR"], "ACB");
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, OtherCounterexamples) {
  const auto t3 = nlohmann::json::parse(
      run({"counterexample", "--model", "pentaline", "--target", "t3"}).out);
  EXPECT_EQ(t3["witness"]["points"], nlohmann::json({"A", "B", "C", "E"}));
  const auto q = nlohmann::json::parse(
      run({"counterexample", "--model", "punctured", "--target", "pasch"}).out);
  EXPECT_EQ(q["line"], "qline:a=1,b=1,c=0");
  const auto g = nlohmann::json::parse(
      run({"counterexample", "--model", "gf5-mid", "--target", "pasch"}).out);
  EXPECT_EQ(g["status"], "Fails");
}

TEST(Cli, TableHasTenTriples) {
  const CliRun r = run({"table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
  EXPECT_NE(r.out.find("ABE     A        (BAE)"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"table", "--json", "-"}).out);
  EXPECT_EQ(j.size(), 10u);
}

TEST(Cli, AnglesOfTheCanonicalTriangle) {
  const CliRun r = run({"angles", "--lines", "harmonic:h0=0,h1=1", "harmonic:h0=0,h1=2",
                     "harmonic:h0=-1/2+1/2*s5,h1=2"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["pairs"].size(), 3u);
  for (const auto& p : j["pairs"]) {
    EXPECT_NEAR(p["theta"].template get<double>() + p["complement"].get<double>(), M_PI, 1e-12);
  }
  EXPECT_GT(j["sum"].get<double>(), M_PI);
  EXPECT_NEAR(j["excess"].get<double>(), j["sum"].get<double>() - M_PI, 1e-12);
}

TEST(Cli, ExpectationFiles) {
  const std::string good = temp_file("nonpasch_expect_good.json",
                                     R"([{"axiom":"T3","status":"Fails"},{"axiom":"B1","status":"Holds"}])");
  EXPECT_EQ(run({"suite", "--model", "pentaline", "--expect", good}).code, 0);
  const std::string bad = temp_file("nonpasch_expect_bad.json",
                                    R"([{"axiom":"T3","status":"Holds"}])");
  const CliRun r = run({"suite", "--model", "pentaline", "--expect", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("T3 expected Holds, got Fails"), std::string::npos);
  EXPECT_EQ(run({"suite", "--model", "pentaline", "--expect", "/nonexistent/x.json"}).code, 2);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args = {"suite", "--model", "prism", "--seed", "7", "--samples",
                                         "200", "--json", "-"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> text = {"suite", "--model", "punctured", "--samples", "200"};
  EXPECT_EQ(run(text).out, run(text).out);
}

TEST(Cli, JsonToFile) {
  const auto path = (std::filesystem::temp_directory_path() / "nonpasch_report.json").string();
  const CliRun r = run({"check", "--model", "pentaline", "--axioms", "T2", "--json", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("T2"), std::string::npos);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j[0]["status"], "Fails");
}
