#pragma once

#include <json.hpp>

#include "advbound/adversary/adversary_matrix.h"
#include "advbound/adversary/minimax.h"

namespace advbound::adversary {

/// Finite doubles as JSON numbers (shortest round-trip form); +-inf and nan
/// as the strings "inf", "-inf", "nan".
nlohmann::json json_real(double v);
double real_from_json(const nlohmann::json& v);

/// Matrix JSON plus "function": the truth table it is defined over.
nlohmann::json to_json(const AdversaryMatrix& gamma);
AdversaryMatrix adversary_from_json(const nlohmann::json& doc);

/// { "rows": [ { "x": "01", "p": [...] }, ... ] }.
nlohmann::json to_json(const MinimaxWitness& witness);
/// Rows are matched to `f` by their "x" strings; every domain string must be
/// present exactly once.
MinimaxWitness witness_from_json(const nlohmann::json& doc, const BooleanFunction& f);

nlohmann::json to_json(const CostVector& alpha);
nlohmann::json to_json(const ValidationReport& report);

}  // namespace advbound::adversary
