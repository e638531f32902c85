#include "advbound/adversary/minimax.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace advbound::adversary {

MinimaxWitness MinimaxWitness::uniform(const BooleanFunction& f) {
  const auto n = static_cast<std::size_t>(f.arity());
  return MinimaxWitness{f, std::vector<std::vector<double>>(f.size(), std::vector<double>(n, 1.0 / static_cast<double>(n)))};
}

void check_witness(const MinimaxWitness& witness) {
  const auto& f = witness.function;
  if (witness.p.size() != f.size()) {
    throw std::invalid_argument("witness has " + std::to_string(witness.p.size()) + " rows, domain has " +
                                std::to_string(f.size()));
  }
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& row = witness.p[k];
    const std::string x = f.domain()[k].str();
    if (row.size() != static_cast<std::size_t>(f.arity())) {
      throw std::invalid_argument("witness row '" + x + "' has wrong length");
    }
    double sum = 0.0;
    for (double v : row) {
      if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("witness row '" + x + "' has an invalid probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("witness row '" + x + "' sums to " + std::to_string(sum));
    }
  }
}

MinimaxEvaluation mm_terms(const MinimaxWitness& witness, const CostVector& alpha) {
  const auto& f = witness.function;
  const auto n = static_cast<std::size_t>(f.arity());
  if (alpha.size() != n) {
    throw std::invalid_argument("cost vector has length " + std::to_string(alpha.size()) +
                                ", function arity is " + std::to_string(n));
  }
  check_witness(witness);
  // sqrt(p) once per entry; the pair loop then needs only products.
  std::vector<std::vector<double>> amp(f.size(), std::vector<double>(n));
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) amp[k][i] = std::sqrt(witness.p[k][i]);
  }
  MinimaxEvaluation out;
  double worst_overlap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < f.size(); ++a) {
    const auto xa = f.domain()[a];
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      if (f.value_at(a) == f.value_at(b)) continue;
      const auto xb = f.domain()[b];
      const std::uint32_t diff = xa.code() ^ xb.code();
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((diff >> (n - 1 - i)) & 1u) s += amp[a][i] * amp[b][i] / alpha[i];
      }
      if (s < worst_overlap) {
        worst_overlap = s;
        out.worst_x = xa.str();
        out.worst_y = xb.str();
      }
    }
  }
  if (out.worst_x.empty()) {
    out.value = 0.0;
  } else {
    out.value = worst_overlap > 0.0 ? 1.0 / worst_overlap : std::numeric_limits<double>::infinity();
  }
  return out;
}

double mm_value(const MinimaxWitness& witness, const CostVector& alpha) { return mm_terms(witness, alpha).value; }

}  // namespace advbound::adversary
