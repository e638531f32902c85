#include "advbound/solver/verify.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "advbound/adversary/compose.h"

namespace advbound::solver {

namespace {

constexpr double kConsistencyTolerance = 1e-8;

void require_within(int arity, int cap, const std::string& what) {
  if (arity > cap) {
    throw std::invalid_argument(what + " has arity " + std::to_string(arity) + ", above the cap of " +
                                std::to_string(cap));
  }
}

bool overlaps(const Bracket& a, const Bracket& b, double tol) {
  return a.lower <= b.upper + tol && b.lower <= a.upper + tol;
}

}  // namespace

CompositionReport verify_composition(const boolfn::CompositionSpec& spec, const CostVector& alpha,
                                     const SolverOptions& opts) {
  opts.check();
  require_within(spec.total_arity(), opts.eigensolve_cap, "composed function");
  require_within(spec.outer().arity(), opts.optimizer_cap, "outer function");
  for (std::size_t i = 0; i < spec.block_count(); ++i) {
    require_within(spec.inner(i).arity(), opts.optimizer_cap, "inner function " + std::to_string(i + 1));
  }
  if (static_cast<int>(alpha.size()) != spec.total_arity()) {
    throw std::invalid_argument("cost vector has length " + std::to_string(alpha.size()) +
                                " but the composed function has arity " + std::to_string(spec.total_arity()));
  }

  CompositionReport rep;
  std::vector<adversary::AdversaryMatrix> inner_gammas;
  std::vector<adversary::MinimaxWitness> inner_witnesses;
  double gap_sum = 0.0;
  for (std::size_t i = 0; i < spec.block_count(); ++i) {
    const auto offset = static_cast<std::size_t>(spec.offsets()[i]);
    const auto count = static_cast<std::size_t>(spec.inner(i).arity());
    rep.inner.push_back(certify(spec.inner(i), alpha.slice(offset, count), opts));
    rep.beta.push_back(rep.inner.back().midpoint());
    inner_gammas.push_back(rep.inner.back().lower_gamma);
    inner_witnesses.push_back(rep.inner.back().upper_witness);
    gap_sum += std::max(0.0, rep.inner.back().gap);
  }
  rep.rhs = certify(spec.outer(), CostVector(rep.beta), opts);
  gap_sum += std::max(0.0, rep.rhs.gap);

  const auto gamma_h = adversary::compose_gamma(rep.rhs.lower_gamma, inner_gammas, spec, opts.eigen, opts.eigensolve_cap);
  const auto witness_h = adversary::compose_minimax(rep.rhs.upper_witness, inner_witnesses, spec, opts.eigensolve_cap);
  rep.composed_lower = adversary::adv_value(gamma_h, alpha, opts.eigen);
  rep.composed_upper = adversary::mm_value(witness_h, alpha);

  if (spec.total_arity() <= opts.optimizer_cap) {
    const auto direct = certify(gamma_h.function, alpha, opts);
    rep.lhs = {direct.lower, direct.upper, "optimized"};
  } else {
    rep.lhs = {rep.composed_lower, rep.composed_upper, "composed"};
  }
  gap_sum += std::max(0.0, rep.lhs.gap());

  rep.tolerance = gap_sum + kAgreementSlack;
  rep.difference = std::abs(rep.lhs.midpoint() - rep.rhs.midpoint());
  rep.sides_agree = rep.difference <= rep.tolerance;
  rep.lower_direction_ok = rep.composed_lower >= rep.rhs.lower - rep.tolerance;
  rep.upper_direction_ok = rep.composed_upper <= rep.rhs.upper + rep.tolerance;

  const auto unit = certify(spec.outer(), CostVector::ones(static_cast<std::size_t>(spec.outer().arity())), opts);
  double a = rep.inner.front().lower;
  double b = rep.inner.front().upper;
  for (const auto& c : rep.inner) {
    a = std::min(a, c.lower);
    b = std::max(b, c.upper);
  }
  rep.scaled_outer = {a * unit.lower, b * unit.upper, "optimized"};
  rep.scaling_bracket_ok = overlaps(rep.lhs, rep.scaled_outer, rep.tolerance);

  rep.pass = rep.sides_agree && rep.lower_direction_ok && rep.upper_direction_ok && rep.scaling_bracket_ok;
  return rep;
}

IterationReport verify_iteration(const BooleanFunction& f, int depth, const SolverOptions& opts) {
  opts.check();
  require_within(f.arity(), opts.optimizer_cap, "base function");
  const auto iterated = boolfn::iterate_function(f, depth, opts.eigensolve_cap);

  IterationReport rep;
  rep.depth = depth;
  const auto unit = CostVector::ones(static_cast<std::size_t>(f.arity()));
  rep.base = certify(f, unit, opts);
  rep.predicted = std::pow(rep.base.midpoint(), depth);

  auto gamma = rep.base.lower_gamma;
  auto witness = rep.base.upper_witness;
  for (int d = 1; d < depth; ++d) {
    const boolfn::CompositionSpec spec(f, std::vector<BooleanFunction>(static_cast<std::size_t>(f.arity()), gamma.function));
    gamma = adversary::compose_gamma(rep.base.lower_gamma,
                                     std::vector<adversary::AdversaryMatrix>(static_cast<std::size_t>(f.arity()), gamma),
                                     spec, opts.eigen, opts.eigensolve_cap);
    witness = adversary::compose_minimax(
        rep.base.upper_witness, std::vector<adversary::MinimaxWitness>(static_cast<std::size_t>(f.arity()), witness), spec,
        opts.eigensolve_cap);
  }
  const auto iterated_unit = CostVector::ones(static_cast<std::size_t>(iterated.arity()));
  rep.composed_lower = adversary::adv_value(gamma, iterated_unit, opts.eigen);
  rep.composed_upper = adversary::mm_value(witness, iterated_unit);

  if (iterated.arity() <= opts.optimizer_cap) {
    const auto direct = certify(iterated, iterated_unit, opts);
    rep.iterate = {direct.lower, direct.upper, "optimized"};
  } else {
    rep.iterate = {rep.composed_lower, rep.composed_upper, "composed"};
  }

  const double lower_power = std::pow(rep.base.lower, depth);
  const double upper_power = std::pow(rep.base.upper, depth);
  rep.tolerance = std::max(0.0, rep.iterate.gap()) + std::max(0.0, upper_power - lower_power);
  rep.contains_prediction =
      rep.predicted >= rep.iterate.lower - rep.tolerance && rep.predicted <= rep.iterate.upper + rep.tolerance;
  rep.composed_consistent =
      std::abs(rep.composed_lower - lower_power) <= kConsistencyTolerance * std::max(1.0, lower_power) &&
      rep.composed_upper <= upper_power * (1.0 + kConsistencyTolerance);
  rep.pass = rep.contains_prediction && rep.composed_consistent;
  return rep;
}

}  // namespace advbound::solver
