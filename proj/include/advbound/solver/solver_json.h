#pragma once

#include <json.hpp>

#include "advbound/solver/gadget.h"
#include "advbound/solver/optimize.h"
#include "advbound/solver/readonce.h"
#include "advbound/solver/verify.h"

namespace advbound::solver {

/// { "function", "alpha", "lower": {"value", "gamma"}, "upper": {"value",
/// "witness"}, "gap", "tight", "solver": {"seed", "restarts", "iterations",
/// "primal_best_restart", "dual_best_restart"} }.
nlohmann::json to_json(const BoundCertificate& cert);
/// Inverse of to_json; re-validates the matrix and witness.
BoundCertificate certificate_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const GadgetResult& gadget);
nlohmann::json to_json(const ReadOnceBound& bound);
nlohmann::json to_json(const ReadOnceCertificate& cert);
nlohmann::json to_json(const Bracket& bracket);
nlohmann::json to_json(const CompositionReport& report);
nlohmann::json to_json(const IterationReport& report);

}  // namespace advbound::solver
