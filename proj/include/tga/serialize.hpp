#pragma once

#include <json.hpp>

#include "tga/algelt.hpp"

namespace tga {

nlohmann::json scalar_to_json(const Scalar& s);   // [a, b, c, d] rational strings
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json algelt_to_json(const AlgElt& a);
AlgElt algelt_from_json(const nlohmann::json& j);

nlohmann::json tensor2_to_json(const Tensor2& t);
Tensor2 tensor2_from_json(const nlohmann::json& j);

}  // namespace tga
