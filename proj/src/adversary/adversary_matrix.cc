#include "advbound/adversary/adversary_matrix.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace advbound::adversary {

AdversaryMatrix AdversaryMatrix::zero(const BooleanFunction& f) {
  return AdversaryMatrix{f, SymMatrix(f.domain())};
}

std::string kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kLabels: return "labels";
    case Violation::Kind::kSameOutput: return "same_output";
    case Violation::Kind::kNegative: return "negative";
    case Violation::Kind::kNonFinite: return "non_finite";
    case Violation::Kind::kAllZero: return "all_zero";
  }
  return "?";
}

ValidationReport validate(const AdversaryMatrix& gamma) {
  ValidationReport report;
  const auto& f = gamma.function;
  const auto& m = gamma.matrix;
  report.constant_function = f.is_constant();
  if (m.labels() != f.domain()) {
    report.valid = false;
    report.violations.push_back(
        {Violation::Kind::kLabels, "", "", 0.0, "matrix labels differ from the function domain"});
    return report;
  }
  bool any_nonzero = false;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = r; c < m.dim(); ++c) {
      const double v = m(r, c);
      const auto rl = m.labels()[r].str();
      const auto cl = m.labels()[c].str();
      if (!std::isfinite(v)) {
        report.violations.push_back({Violation::Kind::kNonFinite, rl, cl, v, "non-finite entry at (" + rl + ", " + cl + ")"});
        continue;
      }
      if (v < 0.0) {
        report.violations.push_back({Violation::Kind::kNegative, rl, cl, v, "negative entry at (" + rl + ", " + cl + ")"});
      }
      if (v != 0.0) {
        any_nonzero = true;
        if (f.value_at(r) == f.value_at(c)) {
          report.violations.push_back({Violation::Kind::kSameOutput, rl, cl, v,
                                       "nonzero entry at (" + rl + ", " + cl + ") with f(x) = f(y)"});
        }
      }
    }
  }
  if (!any_nonzero && !report.constant_function) {
    report.violations.push_back({Violation::Kind::kAllZero, "", "", 0.0,
                                 "matrix is zero but the function is not constant"});
  }
  report.valid = report.violations.empty();
  return report;
}

AdvEvaluation adv_terms(const AdversaryMatrix& gamma, const CostVector& alpha,
                        const specmat::EigenOptions& opts) {
  const int n = gamma.function.arity();
  if (alpha.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cost vector has length " + std::to_string(alpha.size()) +
                                ", function arity is " + std::to_string(n));
  }
  const auto report = validate(gamma);
  for (const auto& v : report.violations) {
    if (v.kind != Violation::Kind::kAllZero) throw std::invalid_argument("invalid adversary matrix: " + v.message);
  }
  AdvEvaluation out;
  out.masked_norms.assign(static_cast<std::size_t>(n), 0.0);
  out.terms.assign(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  if (gamma.matrix.is_zero()) {
    out.value = 0.0;
    return out;
  }
  out.gamma_norm = specmat::spectral_norm(gamma.matrix, opts).norm;
  const auto& labels = gamma.matrix.labels();
  out.value = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    const auto masked = specmat::hadamard(gamma.matrix, specmat::difference_mask(labels, i));
    out.masked_norms[k] = masked.is_zero() ? 0.0 : specmat::spectral_norm(masked, opts).norm;
    if (out.masked_norms[k] > 0.0) out.terms[k] = alpha[k] * (out.gamma_norm / out.masked_norms[k]);
    out.value = std::min(out.value, out.terms[k]);
  }
  return out;
}

double adv_value(const AdversaryMatrix& gamma, const CostVector& alpha, const specmat::EigenOptions& opts) {
  return adv_terms(gamma, alpha, opts).value;
}

}  // namespace advbound::adversary
