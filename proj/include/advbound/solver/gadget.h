#pragma once

#include <string>
#include <string_view>

#include "advbound/adversary/adversary_matrix.h"
#include "advbound/adversary/minimax.h"

namespace advbound::solver {

enum class Gate { kAnd, kOr };

/// "and" / "or", case-insensitive. Throws std::invalid_argument otherwise.
Gate parse_gate(std::string_view name);
std::string gate_name(Gate gate);

struct GadgetResult {
  Gate gate = Gate::kAnd;
  double beta1 = 1.0;
  double beta2 = 1.0;
  /// sqrt(beta1^2 + beta2^2).
  double value = 0.0;
  /// AND: G[01,11] = beta1, G[10,11] = beta2. OR: the same table on
  /// complemented inputs.
  adversary::AdversaryMatrix gamma;
  /// AND: p_00 = p_11 = (beta1^2, beta2^2) / value^2, p_01 = (1,0), p_10 = (0,1).
  /// OR: p_x taken from the AND witness at the complement of x.
  adversary::MinimaxWitness witness;
  /// adv_value(gamma, beta) and mm_value(witness, beta), evaluated.
  double lower = 0.0;
  double upper = 0.0;
  /// ||gamma o D_1||, ||gamma o D_2||.
  double masked_norm1 = 0.0;
  double masked_norm2 = 0.0;
};

/// Throws std::invalid_argument unless beta1, beta2 are positive and finite.
GadgetResult gadget_cost_adv(Gate gate, double beta1, double beta2);

}  // namespace advbound::solver
