#pragma once

#include <json.hpp>

#include "advbound/specmat/sym_matrix.h"

namespace advbound::specmat {

/// { "labels": ["00", ...], "entries": [[...], ...] } with the full matrix.
nlohmann::json to_json(const SymMatrix& m);
/// Rejects non-square, mislabeled or asymmetric input (zero tolerance).
SymMatrix matrix_from_json(const nlohmann::json& doc);

}  // namespace advbound::specmat
