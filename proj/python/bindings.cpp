#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nonpasch/cli.hpp"
#include "nonpasch/engine/structure.hpp"
#include "nonpasch/errors.hpp"
#include "nonpasch/literals.hpp"
#include "nonpasch/pentaline.hpp"

namespace py = pybind11;
using namespace nonpasch;

namespace {

engine::ModelId model_arg(const std::string& name) {
  const auto m = engine::parse_model(name);
  if (!m) throw py::value_error("unknown model '" + name + "'");
  return *m;
}

engine::AxiomId axiom_arg(const std::string& name) {
  const auto a = engine::parse_axiom(name);
  if (!a) throw py::value_error("unknown axiom '" + name + "'");
  return *a;
}

engine::Strategy strategy_arg(const engine::Structure& s, const std::string& kind, std::uint64_t seed,
                              std::size_t samples) {
  if (kind == "exhaustive") return engine::Strategy::exhaustive();
  if (kind == "sampled") return engine::Strategy::sampled(seed, samples);
  if (kind == "default") return engine::default_strategy(s, seed, samples);
  throw py::value_error("strategy must be 'default', 'exhaustive' or 'sampled'");
}

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string suite_json(const std::string& model, const std::optional<std::vector<std::string>>& axioms,
                       const std::string& strategy, std::uint64_t seed, std::size_t samples) {
  const auto s = engine::make_structure(model_arg(model));
  std::vector<engine::AxiomId> ids;
  if (axioms) {
    for (const auto& a : *axioms) ids.push_back(axiom_arg(a));
  } else {
    ids = s->default_suite();
  }
  const auto strat = strategy_arg(*s, strategy, seed, samples);
  std::vector<engine::AxiomReport> reports;
  {
    py::gil_scoped_release release;
    reports = engine::run_suite(s, ids, strat);
  }
  engine::Json out = engine::Json::array();
  for (const auto& r : reports) out.push_back(engine::to_json(r));
  return out.dump();
}

bool replay_json(const std::string& model, const std::string& axiom, const std::string& witness) {
  const auto s = engine::make_structure(model_arg(model));
  return s->replay(axiom_arg(axiom), engine::witness_from_json(engine::Json::parse(witness)));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_nonpasch, m) {
  m.doc() = "Exact models of ordered-plane axioms";

  py::register_exception<Error>(m, "NonpaschError", PyExc_ValueError);

  m.def(
      "between5",
      [](const std::string& x, const std::string& y, const std::string& z) {
        return pentaline::between5(pentaline::parse_vertex(x), pentaline::parse_vertex(y),
                                   pentaline::parse_vertex(z));
      },
      "(x y z) on the five-point line; vertices are the letters A..E.");
  m.def(
      "apex",
      [](const std::string& x, const std::string& y, const std::string& z) {
        return std::string(1, pentaline::apex_of(pentaline::parse_vertex(x), pentaline::parse_vertex(y),
                                                 pentaline::parse_vertex(z))
                                  .letter());
      },
      "The vertex of three distinct vertices that lies between the other two.");
  m.def("models", [] {
    std::vector<std::string> out;
    for (auto id : {engine::ModelId::Pentaline, engine::ModelId::Prism, engine::ModelId::Gf5Mid,
                    engine::ModelId::Gf5Comp, engine::ModelId::Punctured}) {
      out.emplace_back(engine::to_string(id));
    }
    return out;
  });
  m.def("suite_json", &suite_json, py::arg("model"), py::arg("axioms") = py::none(),
        py::arg("strategy") = "default", py::arg("seed") = 42, py::arg("samples") = 1000);
  m.def("replay_json", &replay_json, py::arg("model"), py::arg("axiom"), py::arg("witness"));
  m.def(
      "normalize_line",
      [](const std::string& text) { return literals::format(literals::parse_line_literal(text)); },
      "Parses a line literal and prints it back in canonical form.");
  m.def("run_cli", &run_cli, py::arg("args"),
        "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
