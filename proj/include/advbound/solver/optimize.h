#pragma once

#include <cstdint>

#include "advbound/adversary/adversary_matrix.h"
#include "advbound/adversary/cost_vector.h"
#include "advbound/adversary/minimax.h"
#include "advbound/solver/options.h"

namespace advbound::solver {

using adversary::AdversaryMatrix;
using adversary::CostVector;
using adversary::MinimaxWitness;
using boolfn::BooleanFunction;

struct SearchStats {
  int restarts = 0;
  int iterations = 0;  // per restart
  int best_restart = -1;
};

struct PrimalResult {
  AdversaryMatrix gamma;
  /// adv_value(gamma, alpha).
  double value = 0.0;
  SearchStats stats;
};

struct DualResult {
  MinimaxWitness witness;
  /// mm_value(witness, alpha).
  double value = 0.0;
  SearchStats stats;
};

/// Multi-restart projected ascent on the support of the adversary matrix,
/// maximizing a softmin of the log-ratios log(alpha_i ||G|| / ||G o D_i||).
/// Throws std::invalid_argument when the arity exceeds opts.optimizer_cap.
PrimalResult maximize_adv(const BooleanFunction& f, const CostVector& alpha, const SolverOptions& opts);

/// Multi-restart projected descent on per-input amplitude vectors q_x with
/// p_x = q_x^2, minimizing a softmax of the pair terms.
DualResult minimize_mm(const BooleanFunction& f, const CostVector& alpha, const SolverOptions& opts);

struct BoundCertificate {
  BooleanFunction function;
  CostVector alpha = CostVector::ones(1);
  AdversaryMatrix lower_gamma;
  double lower = 0.0;
  MinimaxWitness upper_witness;
  double upper = 0.0;
  double gap = 0.0;
  bool tight = false;
  std::uint64_t seed = 0;
  SearchStats primal;
  SearchStats dual;

  double midpoint() const { return 0.5 * (lower + upper); }
};

BoundCertificate certify(const BooleanFunction& f, const CostVector& alpha, const SolverOptions& opts);

}  // namespace advbound::solver
