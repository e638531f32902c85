#include "advbound/solver/optimize.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace advbound::solver {

namespace {

using specmat::SymMatrix;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEpsilon = 1e-12;

// Pairs (a < b) of domain indices with differing outputs, and for each pair
// the 0-based positions where the inputs differ.
struct PairSupport {
  int n = 0;
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<int>> differing_bits;
};

PairSupport support_of(const BooleanFunction& f) {
  PairSupport s;
  s.n = f.arity();
  s.dim = f.size();
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      if (f.value_at(a) == f.value_at(b)) continue;
      s.pairs.emplace_back(a, b);
      std::vector<int> bits;
      for (int i = 1; i <= s.n; ++i) {
        if (f.domain()[a].bit(i) != f.domain()[b].bit(i)) bits.push_back(i - 1);
      }
      s.differing_bits.push_back(std::move(bits));
    }
  }
  return s;
}

void check_inputs(const BooleanFunction& f, const CostVector& alpha, const SolverOptions& opts) {
  opts.check();
  if (f.arity() > opts.optimizer_cap) {
    throw std::invalid_argument("arity " + std::to_string(f.arity()) + " exceeds the optimizer cap of " +
                                std::to_string(opts.optimizer_cap));
  }
  if (static_cast<int>(alpha.size()) != f.arity()) {
    throw std::invalid_argument("cost vector has length " + std::to_string(alpha.size()) + " but the function has arity " +
                                std::to_string(f.arity()));
  }
}

double geometric(double start, double end, int t, int total) {
  const double frac = total > 1 ? static_cast<double>(t) / (total - 1) : 0.0;
  return start * std::pow(end / start, frac);
}

// Uniform in [0, 1) from the top 53 bits, independent of the standard
// library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct RestartOutcome {
  double value = 0.0;
  std::vector<double> point;
};

// Runs restart(r) for r in [0, restarts) on up to `jobs` threads and picks the
// best by `better`, lowest index first on ties.
RestartOutcome run_restarts(int restarts, int jobs, const std::function<RestartOutcome(int)>& restart,
                            const std::function<bool(double, double)>& better, int& best_index) {
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  const int workers = std::min(jobs, restarts);
  if (workers <= 1) {
    for (int r = 0; r < restarts; ++r) outcomes[r] = restart(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int r = next++; r < restarts; r = next++) outcomes[r] = restart(r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  best_index = 0;
  for (int r = 1; r < restarts; ++r) {
    if (better(outcomes[r].value, outcomes[best_index].value)) best_index = r;
  }
  return std::move(outcomes[best_index]);
}

AdversaryMatrix gamma_from_weights(const BooleanFunction& f, const PairSupport& s, const std::vector<double>& w) {
  AdversaryMatrix out{f, SymMatrix(f.domain())};
  for (std::size_t e = 0; e < s.pairs.size(); ++e) {
    if (w[e] != 0.0) out.matrix.set(s.pairs[e].first, s.pairs[e].second, w[e]);
  }
  return out;
}

void normalize(std::vector<double>& v) {
  const double norm = specmat::euclidean_norm(v);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
}

RestartOutcome primal_restart(const BooleanFunction& f, const PairSupport& s, const CostVector& alpha,
                              const SolverOptions& opts, int restart) {
  std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(restart));
  const std::size_t m = s.pairs.size();
  std::vector<double> w(m);
  for (double& x : w) x = unit_uniform(rng);
  normalize(w);
  if (specmat::euclidean_norm(w) == 0.0) std::fill(w.begin(), w.end(), 1.0 / std::sqrt(static_cast<double>(m)));

  std::vector<double> moment1(m, 0.0);
  std::vector<double> moment2(m, 0.0);
  std::vector<double> grad(m);
  RestartOutcome best{-kInf, w};
  double beta1_power = 1.0;
  double beta2_power = 1.0;

  for (int t = 0; t < opts.max_iterations; ++t) {
    const double tau = geometric(opts.temperature_start, opts.temperature_end, t, opts.max_iterations);
    const double eta = geometric(opts.primal_step_start, opts.primal_step_end, t, opts.max_iterations);

    const auto gamma = gamma_from_weights(f, s, w);
    const auto top = specmat::principal_eigenvector(gamma.matrix, opts.eigen);
    const double lambda0 = top.eigenvalue;

    // log(alpha_i lambda0 / lambda_i) and d(log lambda_i)/dw per live bit.
    std::vector<double> terms;
    std::vector<std::vector<double>> term_grads;
    for (int i = 0; i < s.n; ++i) {
      SymMatrix masked(f.domain());
      bool any = false;
      for (std::size_t e = 0; e < m; ++e) {
        if (w[e] == 0.0) continue;
        const auto& bits = s.differing_bits[e];
        if (std::find(bits.begin(), bits.end(), i) == bits.end()) continue;
        masked.set(s.pairs[e].first, s.pairs[e].second, w[e]);
        any = true;
      }
      if (!any) continue;
      const auto part = specmat::principal_eigenvector(masked, opts.eigen);
      if (!(part.eigenvalue > 0.0)) continue;
      terms.push_back(std::log(alpha[static_cast<std::size_t>(i)]) + std::log(lambda0) - std::log(part.eigenvalue));
      std::vector<double> g(m, 0.0);
      for (std::size_t e = 0; e < m; ++e) {
        const auto& bits = s.differing_bits[e];
        if (std::find(bits.begin(), bits.end(), i) == bits.end()) continue;
        g[e] = 2.0 * part.vector[s.pairs[e].first] * part.vector[s.pairs[e].second] / part.eigenvalue;
      }
      term_grads.push_back(std::move(g));
    }
    if (terms.empty() || !(lambda0 > 0.0)) break;

    const double t_min = *std::min_element(terms.begin(), terms.end());
    const double exact = std::exp(t_min);
    if (exact > best.value) best = {exact, w};

    std::vector<double> weights(terms.size());
    double z = 0.0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      weights[k] = std::exp(-(terms[k] - t_min) / tau);
      z += weights[k];
    }
    for (std::size_t e = 0; e < m; ++e) {
      double g = 2.0 * top.vector[s.pairs[e].first] * top.vector[s.pairs[e].second] / lambda0;
      for (std::size_t k = 0; k < terms.size(); ++k) g -= weights[k] / z * term_grads[k][e];
      grad[e] = g;
    }

    beta1_power *= kAdamBeta1;
    beta2_power *= kAdamBeta2;
    for (std::size_t e = 0; e < m; ++e) {
      moment1[e] = kAdamBeta1 * moment1[e] + (1.0 - kAdamBeta1) * grad[e];
      moment2[e] = kAdamBeta2 * moment2[e] + (1.0 - kAdamBeta2) * grad[e] * grad[e];
      const double step = (moment1[e] / (1.0 - beta1_power)) / (std::sqrt(moment2[e] / (1.0 - beta2_power)) + kAdamEpsilon);
      w[e] = std::max(0.0, w[e] + eta * step);
    }
    if (specmat::euclidean_norm(w) == 0.0) {
      w = best.point;
    } else {
      normalize(w);
    }
  }
  return best;
}

RestartOutcome dual_restart(const PairSupport& s, const CostVector& alpha, const SolverOptions& opts, int restart) {
  std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(restart));
  const auto n = static_cast<std::size_t>(s.n);
  const double uniform_amplitude = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> q(s.dim * n);
  for (double& x : q) x = unit_uniform(rng) + 0.5;

  auto normalize_rows = [&] {
    for (std::size_t a = 0; a < s.dim; ++a) {
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += q[a * n + i] * q[a * n + i];
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < n; ++i) q[a * n + i] = norm > 0.0 ? q[a * n + i] / norm : uniform_amplitude;
    }
  };
  normalize_rows();

  const std::size_t m = s.pairs.size();
  std::vector<double> overlap(m);
  std::vector<double> loss(m);
  std::vector<double> grad(q.size());
  RestartOutcome best{kInf, q};

  for (int t = 0; t < opts.max_iterations; ++t) {
    const double tau = geometric(opts.temperature_start, opts.temperature_end, t, opts.max_iterations);
    const double eta = geometric(opts.dual_step_start, opts.dual_step_end, t, opts.max_iterations);

    double s_min = kInf;
    for (std::size_t e = 0; e < m; ++e) {
      const auto [a, b] = s.pairs[e];
      double sum = 0.0;
      for (int i : s.differing_bits[e]) sum += q[a * n + i] * q[b * n + i] / alpha[static_cast<std::size_t>(i)];
      overlap[e] = sum;
      loss[e] = -std::log(std::max(sum, 1e-300));
      s_min = std::min(s_min, sum);
    }
    const double exact = s_min > 0.0 ? 1.0 / s_min : kInf;
    if (exact < best.value) best = {exact, q};

    const double l_max = *std::max_element(loss.begin(), loss.end());
    double z = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      loss[e] = std::exp((loss[e] - l_max) / tau);
      z += loss[e];
    }
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t e = 0; e < m; ++e) {
      const double weight = loss[e] / z / std::max(overlap[e], 1e-300);
      const auto [a, b] = s.pairs[e];
      for (int i : s.differing_bits[e]) {
        const double inv_cost = 1.0 / alpha[static_cast<std::size_t>(i)];
        grad[a * n + i] -= weight * q[b * n + i] * inv_cost;
        grad[b * n + i] -= weight * q[a * n + i] * inv_cost;
      }
    }
    const double gnorm = specmat::euclidean_norm(grad);
    if (!(gnorm > 0.0)) break;
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = std::max(0.0, q[k] - eta * grad[k] / gnorm);
    normalize_rows();
  }
  return best;
}

MinimaxWitness witness_from_amplitudes(const BooleanFunction& f, const std::vector<double>& q) {
  const auto n = static_cast<std::size_t>(f.arity());
  MinimaxWitness out{f, std::vector<std::vector<double>>(f.size(), std::vector<double>(n))};
  for (std::size_t a = 0; a < f.size(); ++a) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += q[a * n + i] * q[a * n + i];
    for (std::size_t i = 0; i < n; ++i) out.p[a][i] = q[a * n + i] * q[a * n + i] / total;
  }
  return out;
}

}  // namespace

PrimalResult maximize_adv(const BooleanFunction& f, const CostVector& alpha, const SolverOptions& opts) {
  check_inputs(f, alpha, opts);
  const auto s = support_of(f);
  if (s.pairs.empty()) return {AdversaryMatrix::zero(f), 0.0, {}};
  int best_index = 0;
  auto best = run_restarts(
      opts.restarts, opts.jobs, [&](int r) { return primal_restart(f, s, alpha, opts, r); },
      [](double a, double b) { return a > b; }, best_index);
  auto gamma = gamma_from_weights(f, s, best.point);
  const double value = adversary::adv_value(gamma, alpha, opts.eigen);
  return {std::move(gamma), value, {opts.restarts, opts.max_iterations, best_index}};
}

DualResult minimize_mm(const BooleanFunction& f, const CostVector& alpha, const SolverOptions& opts) {
  check_inputs(f, alpha, opts);
  const auto s = support_of(f);
  if (s.pairs.empty()) {
    auto w = MinimaxWitness::uniform(f);
    return {w, adversary::mm_value(w, alpha), {}};
  }
  int best_index = 0;
  auto best = run_restarts(
      opts.restarts, opts.jobs, [&](int r) { return dual_restart(s, alpha, opts, r); },
      [](double a, double b) { return a < b; }, best_index);
  auto witness = witness_from_amplitudes(f, best.point);
  const double value = adversary::mm_value(witness, alpha);
  return {std::move(witness), value, {opts.restarts, opts.max_iterations, best_index}};
}

BoundCertificate certify(const BooleanFunction& f, const CostVector& alpha, const SolverOptions& opts) {
  auto lower = maximize_adv(f, alpha, opts);
  auto upper = minimize_mm(f, alpha, opts);
  BoundCertificate cert;
  cert.function = f;
  cert.alpha = alpha;
  cert.lower_gamma = std::move(lower.gamma);
  cert.lower = lower.value;
  cert.upper_witness = std::move(upper.witness);
  cert.upper = upper.value;
  cert.gap = cert.upper - cert.lower;
  cert.tight = cert.gap <= opts.target_gap;
  cert.seed = opts.seed;
  cert.primal = lower.stats;
  cert.dual = upper.stats;
  return cert;
}

}  // namespace advbound::solver
