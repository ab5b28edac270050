#include "nonpasch/engine/report.hpp"

#include <algorithm>

#include "nonpasch/errors.hpp"

namespace nonpasch::engine {

const std::array<AxiomId, kAxiomCount>& all_axioms() {
  static const std::array<AxiomId, kAxiomCount> ids = {
      AxiomId::I1, AxiomId::I2, AxiomId::I3, AxiomId::I4, AxiomId::B1,
      AxiomId::B2, AxiomId::B3, AxiomId::B4, AxiomId::B4star, AxiomId::T1,
      AxiomId::T2, AxiomId::T3, AxiomId::T4, AxiomId::T5, AxiomId::Arch5,
      AxiomId::Cantor5, AxiomId::Dedekind5,
  };
  return ids;
}

std::string_view to_string(AxiomId a) {
  switch (a) {
    case AxiomId::I1: return "I1";
    case AxiomId::I2: return "I2";
    case AxiomId::I3: return "I3";
    case AxiomId::I4: return "I4";
    case AxiomId::B1: return "B1";
    case AxiomId::B2: return "B2";
    case AxiomId::B3: return "B3";
    case AxiomId::B4: return "B4";
    case AxiomId::B4star: return "B4star";
    case AxiomId::T1: return "T1";
    case AxiomId::T2: return "T2";
    case AxiomId::T3: return "T3";
    case AxiomId::T4: return "T4";
    case AxiomId::T5: return "T5";
    case AxiomId::Arch5: return "Arch5";
    case AxiomId::Cantor5: return "Cantor5";
    case AxiomId::Dedekind5: return "Dedekind5";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view text) {
  for (AxiomId a : all_axioms()) {
    if (to_string(a) == text) return a;
  }
  return std::nullopt;
}

std::string_view to_string(ModelId m) {
  switch (m) {
    case ModelId::Pentaline: return "pentaline";
    case ModelId::Prism: return "prism";
    case ModelId::Gf5Mid: return "gf5-mid";
    case ModelId::Gf5Comp: return "gf5-comp";
    case ModelId::Punctured: return "punctured";
  }
  return "?";
}

std::optional<ModelId> parse_model(std::string_view text) {
  for (ModelId m : {ModelId::Pentaline, ModelId::Prism, ModelId::Gf5Mid, ModelId::Gf5Comp,
                    ModelId::Punctured}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::HoldsOnSample: return "HoldsOnSample";
    case Status::Fails: return "Fails";
    case Status::Unsupported: return "Unsupported";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view text) {
  for (Status s : {Status::Holds, Status::HoldsOnSample, Status::Fails, Status::Unsupported}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

Json to_json(const Witness& w) {
  Json j;
  j["points"] = w.points;
  j["lines"] = w.lines;
  j["violation"] = w.violation;
  return j;
}

Witness witness_from_json(const Json& j) {
  return {j.at("points").get<std::vector<std::string>>(),
          j.at("lines").get<std::vector<std::string>>(), j.at("violation").get<std::string>()};
}

Json to_json(const AxiomReport& r, bool include_timing) {
  Json j;
  j["model"] = to_string(r.model);
  j["axiom"] = to_string(r.axiom);
  Json strat;
  if (r.strategy.kind == Strategy::Kind::Exhaustive) {
    strat["type"] = "exhaustive";
    strat["seed"] = nullptr;
    strat["samples"] = nullptr;
  } else {
    strat["type"] = "sampled";
    strat["seed"] = r.strategy.seed;
    strat["samples"] = r.strategy.samples;
  }
  j["strategy"] = strat;
  j["status"] = to_string(r.status);
  if (r.status == Status::Unsupported) j["reason"] = r.reason;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["elapsed_ms"] = include_timing ? Json(r.elapsed_ms) : Json(nullptr);
  return j;
}

AxiomReport report_from_json(const Json& j) {
  auto fail = [](const std::string& what) -> AxiomReport {
    throw Error(ErrorCode::Parse, "report: " + what);
  };
  AxiomReport r;
  const auto model = parse_model(j.at("model").get<std::string>());
  const auto axiom = parse_axiom(j.at("axiom").get<std::string>());
  const auto status = parse_status(j.at("status").get<std::string>());
  if (!model) return fail("unknown model");
  if (!axiom) return fail("unknown axiom");
  if (!status) return fail("unknown status");
  r.model = *model;
  r.axiom = *axiom;
  r.status = *status;
  const auto& s = j.at("strategy");
  if (s.at("type") == "sampled") {
    r.strategy = Strategy::sampled(s.at("seed").get<std::uint64_t>(),
                                   s.at("samples").get<std::size_t>());
  }
  if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
  if (!j.at("witness").is_null()) r.witness = witness_from_json(j.at("witness"));
  if (!j.at("elapsed_ms").is_null()) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

}  // namespace nonpasch::engine
