#pragma once

#include "nonpasch/engine/structure.hpp"
#include "nonpasch/gf5plane.hpp"

namespace nonpasch::engine::detail {

StructureHandle make_pentaline();
StructureHandle make_prism(const SampleBounds& bounds);
StructureHandle make_gf5(gf5plane::Relation rel);
StructureHandle make_punctured(const SampleBounds& bounds);

/// The plane axioms and theorems, in report order.
std::vector<AxiomId> plane_suite();

}  // namespace nonpasch::engine::detail
