#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace nonpasch::engine {

enum class AxiomId {
  I1, I2, I3, I4,
  B1, B2, B3, B4, B4star,
  T1, T2, T3, T4, T5,
  Arch5, Cantor5, Dedekind5,
};

inline constexpr std::size_t kAxiomCount = 17;

const std::array<AxiomId, kAxiomCount>& all_axioms();
std::string_view to_string(AxiomId a);
/// Accepts the names printed by to_string ("B4star", "Dedekind5", ...).
std::optional<AxiomId> parse_axiom(std::string_view text);

enum class ModelId { Pentaline, Prism, Gf5Mid, Gf5Comp, Punctured };

std::string_view to_string(ModelId m);
/// "pentaline", "prism", "gf5-mid", "gf5-comp", "punctured".
std::optional<ModelId> parse_model(std::string_view text);

struct Capabilities {
  bool finite_points = false;
  bool finite_lines = false;
  bool enumerable = false;
  bool samplable = true;
};

struct Strategy {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t samples = 0;

  static Strategy exhaustive() { return {}; }
  static Strategy sampled(std::uint64_t seed, std::size_t samples) {
    return {Kind::Sampled, seed, samples};
  }

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

enum class Status { Holds, HoldsOnSample, Fails, Unsupported };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view text);

/// A violating instance: model literals for its points and lines, in the
/// axiom's argument order, plus a readable account of the violation.
struct Witness {
  std::vector<std::string> points;
  std::vector<std::string> lines;
  std::string violation;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomReport {
  ModelId model = ModelId::Pentaline;
  AxiomId axiom = AxiomId::I1;
  Strategy strategy;
  Status status = Status::Unsupported;
  std::optional<Witness> witness;  // present exactly for Fails
  std::string reason;              // non-empty exactly for Unsupported
  double elapsed_ms = 0;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

using Json = nlohmann::ordered_json;

/// Stable field order: model, axiom, strategy, status, [reason], witness,
/// elapsed_ms. Without `include_timing`, elapsed_ms is written as null so
/// that repeated runs are byte-identical.
Json to_json(const AxiomReport& r, bool include_timing = false);
Json to_json(const Witness& w);
AxiomReport report_from_json(const Json& j);
Witness witness_from_json(const Json& j);

}  // namespace nonpasch::engine
