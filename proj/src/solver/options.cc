#include "advbound/solver/options.h"

#include <stdexcept>
#include <string>

namespace advbound::solver {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string("solver option '") + name + "' must be positive");
}

}  // namespace

void SolverOptions::check() const {
  require_positive(restarts, "restarts");
  require_positive(max_iterations, "max_iterations");
  require_positive(temperature_start, "temperature_start");
  require_positive(temperature_end, "temperature_end");
  require_positive(primal_step_start, "primal_step_start");
  require_positive(primal_step_end, "primal_step_end");
  require_positive(dual_step_start, "dual_step_start");
  require_positive(dual_step_end, "dual_step_end");
  require_positive(target_gap, "target_gap");
  require_positive(jobs, "jobs");
  require_positive(optimizer_cap, "optimizer_cap");
  require_positive(eigensolve_cap, "eigensolve_cap");
}

}  // namespace advbound::solver
