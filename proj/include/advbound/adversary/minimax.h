#pragma once

#include <string>
#include <vector>

#include "advbound/adversary/cost_vector.h"
#include "advbound/boolfn/boolean_function.h"

namespace advbound::adversary {

using boolfn::BooleanFunction;

/// One probability distribution over bit positions per domain input;
/// p[k] belongs to function.domain()[k].
struct MinimaxWitness {
  BooleanFunction function;
  std::vector<std::vector<double>> p;

  static MinimaxWitness uniform(const BooleanFunction& f);
};

inline constexpr double kRowSumTolerance = 1e-12;

/// Throws std::invalid_argument unless every row has length n, nonnegative
/// finite entries and sums to 1 within kRowSumTolerance.
void check_witness(const MinimaxWitness& witness);

struct MinimaxEvaluation {
  /// max over f(x) != f(y) of 1 / sum_{i: x_i != y_i} sqrt(p_x(i) p_y(i)) / alpha_i.
  double value = 0.0;
  /// The pair attaining the max; empty for a constant function.
  std::string worst_x;
  std::string worst_y;
};

MinimaxEvaluation mm_terms(const MinimaxWitness& witness, const CostVector& alpha);
/// 0 for a constant function, +inf if some pair has an empty overlap.
double mm_value(const MinimaxWitness& witness, const CostVector& alpha);

}  // namespace advbound::adversary
