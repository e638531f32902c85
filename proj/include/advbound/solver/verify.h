#pragma once

#include <string>
#include <vector>

#include "advbound/boolfn/composition.h"
#include "advbound/solver/optimize.h"

namespace advbound::solver {

/// Lower/upper bracket on an adversary value and how it was obtained.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  /// "optimized" (certify) or "composed" (composed component certificates).
  std::string method;

  double gap() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
};

struct CompositionReport {
  std::vector<BoundCertificate> inner;
  /// beta_i = inner[i].midpoint().
  std::vector<double> beta;
  /// ADV_alpha(h): certify(h) when h fits the optimizer cap, else the composed bracket.
  Bracket lhs;
  /// certify(f, beta).
  BoundCertificate rhs;
  /// adv_value of the composed matrix and mm_value of the composed witness.
  double composed_lower = 0.0;
  double composed_upper = 0.0;
  /// Sum of every certificate gap that enters the comparison, plus 1e-2.
  double tolerance = 0.0;
  double difference = 0.0;
  bool sides_agree = false;
  /// composed_lower >= rhs.lower - tolerance.
  bool lower_direction_ok = false;
  /// composed_upper <= rhs.upper + tolerance.
  bool upper_direction_ok = false;
  /// [lhs.lower, lhs.upper] meets [a * ADV(f).lower, b * ADV(f).upper] within
  /// tolerance, with a = min_i inner[i].lower, b = max_i inner[i].upper.
  Bracket scaled_outer;
  bool scaling_bracket_ok = false;
  bool pass = false;
};

inline constexpr double kAgreementSlack = 1e-2;

/// Throws std::invalid_argument when the composed arity exceeds
/// opts.eigensolve_cap or a component exceeds opts.optimizer_cap.
CompositionReport verify_composition(const boolfn::CompositionSpec& spec, const CostVector& alpha,
                                     const SolverOptions& opts);

struct IterationReport {
  int depth = 1;
  BoundCertificate base;
  /// base.midpoint()^depth.
  double predicted = 0.0;
  /// ADV(f^d): certify when it fits the optimizer cap, else composed.
  Bracket iterate;
  /// adv_value / mm_value of the d-fold composed base certificates.
  double composed_lower = 0.0;
  double composed_upper = 0.0;
  /// iterate.gap() + base.upper^d - base.lower^d.
  double tolerance = 0.0;
  bool contains_prediction = false;
  /// composed_lower = base.lower^d and composed_upper <= base.upper^d, relative 1e-8.
  bool composed_consistent = false;
  bool pass = false;
};

/// Unit costs throughout. Throws std::invalid_argument when n^d exceeds
/// opts.eigensolve_cap, f is not total, or f exceeds opts.optimizer_cap.
IterationReport verify_iteration(const BooleanFunction& f, int depth, const SolverOptions& opts);

}  // namespace advbound::solver
