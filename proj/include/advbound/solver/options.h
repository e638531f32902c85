#pragma once

#include <cstdint>

#include "advbound/boolfn/boolean_function.h"
#include "advbound/specmat/spectral.h"

namespace advbound::solver {

struct SolverOptions {
  int restarts = 8;
  /// Per restart, for each of the primal and dual searches.
  int max_iterations = 5000;
  /// Softmin/softmax temperature, geometric from start to end.
  double temperature_start = 0.05;
  double temperature_end = 5e-5;
  /// Primal (adversary matrix) step size, geometric from start to end.
  double primal_step_start = 0.05;
  double primal_step_end = 1e-4;
  /// Dual (witness) step size, geometric from start to end.
  double dual_step_start = 0.3;
  double dual_step_end = 3e-6;
  /// Restart r draws its initial point from seed + r.
  std::uint64_t seed = 0;
  double target_gap = 1e-3;
  /// Restarts run on up to this many threads; results do not depend on it.
  int jobs = 1;
  /// Largest arity handed to the optimizers.
  int optimizer_cap = 5;
  /// Largest arity for constructions that only need eigensolves.
  int eigensolve_cap = boolfn::kDefaultSizeCap;
  specmat::EigenOptions eigen;

  /// Throws std::invalid_argument on a non-positive setting.
  void check() const;
};

}  // namespace advbound::solver
