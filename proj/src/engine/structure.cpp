#include "nonpasch/engine/structure.hpp"

#include <future>

#include "engine/models.hpp"
#include "nonpasch/errors.hpp"

namespace nonpasch::engine {

StructureHandle make_structure(ModelId m, const SampleBounds& bounds) {
  switch (m) {
    case ModelId::Pentaline: return detail::make_pentaline();
    case ModelId::Prism: return detail::make_prism(bounds);
    case ModelId::Gf5Mid: return detail::make_gf5(gf5plane::Relation::Mid);
    case ModelId::Gf5Comp: return detail::make_gf5(gf5plane::Relation::Comp);
    case ModelId::Punctured: return detail::make_punctured(bounds);
  }
  throw Error(ErrorCode::UnsupportedAxiom, "unknown model");
}

AxiomReport check_axiom(const StructureHandle& s, AxiomId a, const Strategy& strat) {
  return s->check(a, strat);
}

std::vector<AxiomReport> run_suite(const StructureHandle& s, const std::vector<AxiomId>& axioms,
                                   const Strategy& strat) {
  std::vector<std::future<AxiomReport>> pending;
  pending.reserve(axioms.size());
  for (AxiomId a : axioms) {
    pending.push_back(std::async(std::launch::async, [s, a, strat] {
      try {
        return s->check(a, strat);
      } catch (const Error& e) {
        AxiomReport r;
        r.model = s->model();
        r.axiom = a;
        r.strategy = strat;
        r.status = Status::Unsupported;
        r.reason = e.what();
        return r;
      }
    }));
  }
  std::vector<AxiomReport> out;
  out.reserve(axioms.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

Strategy default_strategy(const Structure& s, std::uint64_t seed, std::size_t samples) {
  if (s.capabilities().enumerable) return Strategy::exhaustive();
  return Strategy::sampled(seed, samples);
}

}  // namespace nonpasch::engine
