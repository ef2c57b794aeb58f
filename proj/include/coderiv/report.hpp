#pragma once

#include <string>

#include "json.hpp"

#include "coderiv/deformation.hpp"
#include "coderiv/hochschild.hpp"
#include "coderiv/verify.hpp"

namespace coderiv {

using Json = nlohmann::ordered_json;

Json cohomology_json(const CohomologyReport &report);
std::string cohomology_text(const CohomologyReport &report);

Json invariants_json(const StructuralInvariants &inv);
Json classify_json(const MulTable<Rational> &m, AlgebraClass cls,
                   const StructuralInvariants &inv);
std::string classify_text(const MulTable<Rational> &m, AlgebraClass cls,
                          const StructuralInvariants &inv);

Json deform_json(const DeformationFamily &f, const ObstructionResult &obs,
                 const DeformationGraph &graph,
                 const std::vector<std::string> &notes);
std::string deform_text(const DeformationFamily &f,
                        const ObstructionResult &obs,
                        const DeformationGraph &graph,
                        const std::vector<std::string> &notes);

Json census_json(const Census &census);
std::string census_text(const Census &census);

Json verify_json(const std::vector<VerifyItem> &items);
std::string verify_text(const std::vector<VerifyItem> &items);

}  // namespace coderiv
