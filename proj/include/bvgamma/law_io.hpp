#pragma once

// Text and JSON forms of interaction laws.
//
// Spec language: phi1, phi:k, pca:[l1,l2,...], pca2:[a1,...], psi:m, theta,
// zeta:@file.json, phieps:eps. Weights accept rationals such as 1/3.

#include <string_view>

#include <json.hpp>

#include "bvgamma/interaction.hpp"

namespace bvgamma {

InteractionLaw parse_law_spec(std::string_view spec);

nlohmann::json law_to_json(const InteractionLaw& law);
InteractionLaw law_from_json(const nlohmann::json& j);

}  // namespace bvgamma
