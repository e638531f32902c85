#pragma once

#include <string>
#include <vector>

#include "advbound/adversary/cost_vector.h"
#include "advbound/boolfn/boolean_function.h"
#include "advbound/specmat/spectral.h"
#include "advbound/specmat/sym_matrix.h"

namespace advbound::adversary {

using boolfn::BitString;
using boolfn::BooleanFunction;
using specmat::SymMatrix;

/// A symmetric matrix over the domain of `function`, to be checked with
/// validate(): nonnegative and zero on every pair with equal outputs.
struct AdversaryMatrix {
  BooleanFunction function;
  SymMatrix matrix;

  static AdversaryMatrix zero(const BooleanFunction& f);
};

struct Violation {
  enum class Kind { kLabels, kSameOutput, kNegative, kNonFinite, kAllZero };
  Kind kind;
  std::string row;
  std::string col;
  double value = 0.0;
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  bool constant_function = false;
  std::vector<Violation> violations;
};

std::string kind_name(Violation::Kind kind);

/// Lists every violation; never throws.
ValidationReport validate(const AdversaryMatrix& gamma);

struct AdvEvaluation {
  double gamma_norm = 0.0;
  /// ||Gamma o D_i|| for i = 1..n.
  std::vector<double> masked_norms;
  /// alpha_i ||Gamma|| / ||Gamma o D_i||, +inf where the masked norm is 0.
  std::vector<double> terms;
  double value = 0.0;
};

/// Every quantity behind adv_value. The all-zero matrix evaluates to 0.
/// Throws std::invalid_argument on an arity mismatch or when validate()
/// reports anything other than an all-zero matrix.
AdvEvaluation adv_terms(const AdversaryMatrix& gamma, const CostVector& alpha,
                        const specmat::EigenOptions& opts = {});

/// min_i alpha_i ||Gamma|| / ||Gamma o D_i||.
double adv_value(const AdversaryMatrix& gamma, const CostVector& alpha,
                 const specmat::EigenOptions& opts = {});

}  // namespace advbound::adversary
