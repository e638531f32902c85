#pragma once

#include <string>
#include <vector>

#include "advbound/adversary/adversary_matrix.h"
#include "advbound/adversary/cost_vector.h"
#include "advbound/adversary/minimax.h"
#include "advbound/boolfn/formula.h"
#include "advbound/specmat/spectral.h"

namespace advbound::solver {

struct TraceStep {
  /// Canonical text of the subformula.
  std::string node;
  /// "leaf", "not", "and" or "or".
  std::string kind;
  std::vector<double> inputs;
  double value = 0.0;
};

struct ReadOnceBound {
  double value = 0.0;
  /// Post-order, root last.
  std::vector<TraceStep> trace;
};

/// Leaf x_i contributes alpha_i, negation passes its child's value through,
/// and a gate with child values (b1, b2) contributes sqrt(b1^2 + b2^2).
/// Throws std::invalid_argument unless the formula is read-once over exactly
/// x1..xn with n = alpha.size().
ReadOnceBound readonce_bound(const boolfn::FormulaAst& ast, const adversary::CostVector& alpha);

struct ReadOnceCertificate {
  boolfn::BooleanFunction function;
  /// Built by composing gate gadgets bottom-up.
  adversary::AdversaryMatrix gamma;
  adversary::MinimaxWitness witness;
  double bound = 0.0;
  /// adv_value(gamma, alpha) and mm_value(witness, alpha).
  double lower = 0.0;
  double upper = 0.0;
};

/// Explicit matrix and witness realizing readonce_bound. Needs n <= size_cap.
ReadOnceCertificate readonce_certificate(const boolfn::FormulaAst& ast, const adversary::CostVector& alpha,
                                         const specmat::EigenOptions& opts = {},
                                         int size_cap = boolfn::kDefaultSizeCap);

}  // namespace advbound::solver
