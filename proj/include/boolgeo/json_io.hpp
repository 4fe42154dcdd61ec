#pragma once

#include <json.hpp>

#include "boolgeo/ortho.hpp"

namespace boolgeo {

nlohmann::ordered_json to_json(const OrthogonalSystem& o);
OrthogonalSystem orthogonal_from_json(const nlohmann::ordered_json& j, const Limits& limits = {});

}  // namespace boolgeo
