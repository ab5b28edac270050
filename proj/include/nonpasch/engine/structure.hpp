#pragma once

#include <memory>
#include <vector>

#include "nonpasch/engine/report.hpp"
#include "nonpasch/random.hpp"

namespace nonpasch::engine {

/// One of the five geometries, seen through the axiom checker.
///
/// Finite structures are checked exhaustively (every instance of the
/// axiom's universal quantifiers, in lexicographic order, so the first
/// failure found is the minimal witness) or by sampling. Infinite ones are
/// sampled: universal variables are drawn from a seeded stream, existential
/// ones are produced by construction. Known counterexamples are consulted
/// before either strategy, so a Fails status never depends on luck.
class Structure {
 public:
  virtual ~Structure() = default;

  virtual ModelId model() const = 0;
  virtual Capabilities capabilities() const = 0;

  /// Whether the axiom makes sense for this structure at all.
  virtual bool applicable(AxiomId a) const = 0;
  virtual std::vector<AxiomId> default_suite() const = 0;

  /// Throws Error{IncompatibleStrategy} for exhaustive checks of an
  /// infinite structure. Inapplicable axioms yield status Unsupported.
  virtual AxiomReport check(AxiomId a, const Strategy& s) const = 0;

  /// Re-runs the single instance described by `w`; true iff it still
  /// violates the axiom.
  virtual bool replay(AxiomId a, const Witness& w) const = 0;
};

using StructureHandle = std::shared_ptr<const Structure>;

StructureHandle make_structure(ModelId m, const SampleBounds& bounds = {});

AxiomReport check_axiom(const StructureHandle& s, AxiomId a, const Strategy& strat);

/// Reports in input order. Checks run concurrently; each draws from its own
/// stream derived from (seed, axiom), so the output does not depend on
/// scheduling. A check that throws is reported as Unsupported with the
/// error as reason; the rest of the suite still runs.
std::vector<AxiomReport> run_suite(const StructureHandle& s, const std::vector<AxiomId>& axioms,
                                   const Strategy& strat);

/// Sampled for infinite structures, exhaustive otherwise.
Strategy default_strategy(const Structure& s, std::uint64_t seed, std::size_t samples);

}  // namespace nonpasch::engine
