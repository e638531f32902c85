#pragma once

#include <string>

#include <json.hpp>

#include "advbound/boolfn/boolean_function.h"

namespace advbound::boolfn {

/// { "n": 2, "rows": [ { "x": "01", "f": 0 }, ... ] }; absent strings are
/// outside the domain.
nlohmann::json to_json(const BooleanFunction& f);
/// Throws std::invalid_argument on a malformed document.
BooleanFunction function_from_json(const nlohmann::json& doc);

BooleanFunction load_truth_table(const std::string& path);

}  // namespace advbound::boolfn
