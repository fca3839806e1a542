#pragma once

#include "isodyn/dpmodels.hpp"
#include "isodyn/fuchsian.hpp"

#include "json.hpp"

namespace isodyn {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json p1_to_json(const P1& p);
P1 p1_from_json(const Json& j);

Json mat_to_json(const RatMat& m);
RatMat mat_from_json(const Json& j);

Json scheme_to_json(const RiemannScheme& scheme);
RiemannScheme scheme_from_json(const Json& j);

Json point_to_json(const DecompositionPoint& point);
DecompositionPoint point_from_json(const Json& j);

Json params_a2_to_json(const ParamsA2& params);
ParamsA2 params_a2_from_json(const Json& j);

Json params_a1_to_json(const ParamsA1& params);
ParamsA1 params_a1_from_json(const Json& j);

}  // namespace isodyn
