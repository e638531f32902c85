#include "advbound/solver/gadget.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace advbound::solver {

namespace {

using boolfn::BitString;

void put(adversary::AdversaryMatrix& gamma, const char* x, const char* y, double v) {
  const auto& f = gamma.function;
  gamma.matrix.set(*f.index_of(BitString::parse(x)), *f.index_of(BitString::parse(y)), v);
}

}  // namespace

Gate parse_gate(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "and") return Gate::kAnd;
  if (lower == "or") return Gate::kOr;
  throw std::invalid_argument("unknown gate '" + std::string(name) + "' (expected and or or)");
}

std::string gate_name(Gate gate) { return gate == Gate::kAnd ? "and" : "or"; }

GadgetResult gadget_cost_adv(Gate gate, double beta1, double beta2) {
  if (!(beta1 > 0.0) || !(beta2 > 0.0) || !std::isfinite(beta1) || !std::isfinite(beta2)) {
    throw std::invalid_argument("gadget costs must be positive and finite");
  }
  GadgetResult out;
  out.gate = gate;
  out.beta1 = beta1;
  out.beta2 = beta2;
  out.value = std::hypot(beta1, beta2);

  const bool is_and = gate == Gate::kAnd;
  const auto f = boolfn::make_family(is_and ? boolfn::Family::kAnd : boolfn::Family::kOr, 2);
  out.gamma = adversary::AdversaryMatrix{f, specmat::SymMatrix(f.domain())};
  // OR relabels every string by its complement.
  put(out.gamma, is_and ? "01" : "10", is_and ? "11" : "00", beta1);
  put(out.gamma, is_and ? "10" : "01", is_and ? "11" : "00", beta2);

  const double total = beta1 * beta1 + beta2 * beta2;
  const std::vector<double> balanced{beta1 * beta1 / total, beta2 * beta2 / total};
  out.witness = adversary::MinimaxWitness{f, std::vector<std::vector<double>>(4)};
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto x = is_and ? f.domain()[k] : f.domain()[k].complement();
    if (x.str() == "01") {
      out.witness.p[k] = {1.0, 0.0};
    } else if (x.str() == "10") {
      out.witness.p[k] = {0.0, 1.0};
    } else {
      out.witness.p[k] = balanced;
    }
  }

  const adversary::CostVector beta({beta1, beta2});
  const auto eval = adversary::adv_terms(out.gamma, beta);
  out.lower = eval.value;
  out.masked_norm1 = eval.masked_norms[0];
  out.masked_norm2 = eval.masked_norms[1];
  out.upper = adversary::mm_value(out.witness, beta);
  return out;
}

}  // namespace advbound::solver
