#include "advbound/specmat/spectral.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace advbound::specmat {

namespace {

// Flips v so that its largest-magnitude entry is positive. Entries within a
// relative 1e-12 of the maximum count as ties; the lowest index wins.
void orient(std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return;
  for (double x : v) {
    if (std::abs(x) >= peak * (1.0 - 1e-12)) {
      if (x < 0.0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

void normalize(std::vector<double>& v) {
  const double n = euclidean_norm(v);
  if (n > 0.0) {
    for (double& x : v) x /= n;
  }
}

struct PowerResult {
  double eigenvalue;
  std::vector<double> vector;
  double residual;
};

// Largest eigenvalue of sign * A by power iteration on sign * A + shift * I,
// where shift = max absolute row sum keeps every shifted eigenvalue >= 0.
PowerResult shifted_power(const SymMatrix& a, double sign, std::vector<double> start,
                          const EigenOptions& opts) {
  const std::size_t n = a.dim();
  const double shift = a.max_abs_row_sum();
  std::vector<double> v = std::move(start);
  normalize(v);
  double lambda = 0.0;
  double residual = 0.0;
  for (long it = 0; it < opts.power_max_iterations; ++it) {
    std::vector<double> w = a.multiply(v);
    for (double& x : w) x *= sign;
    lambda = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - lambda * v[i];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    if (residual <= opts.power_tolerance * std::max(1.0, std::abs(lambda))) {
      return {sign * lambda, std::move(v), residual};
    }
    for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
    const double wn = euclidean_norm(w);
    if (wn == 0.0) return {sign * lambda, std::move(v), residual};
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wn;
  }
  throw ConvergenceError("power iteration did not converge within " +
                             std::to_string(opts.power_max_iterations) + " iterations",
                         residual);
}

std::vector<double> pseudo_random_start(std::size_t n) {
  // Fixed-seed LCG; keeps results independent of the standard library.
  std::vector<double> v(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (auto& x : v) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    x = static_cast<double>(state >> 11) / static_cast<double>(1ull << 53) - 0.5;
  }
  return v;
}

}  // namespace

double euclidean_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double eigen_residual(const SymMatrix& a, std::span<const double> v, double lambda) {
  auto w = a.multiply(v);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double d = w[i] - lambda * v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Eigensystem jacobi_eigensystem(const SymMatrix& a, const EigenOptions& opts) {
  const std::size_t n = a.dim();
  std::vector<double> m(a.data().begin(), a.data().end());
  std::vector<double> v(n * n, 0.0);  // columns are eigenvectors
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [n](std::vector<double>& s, std::size_t r, std::size_t c) -> double& { return s[r * n + c]; };

  const double frob = a.frobenius_norm();
  const double target = opts.jacobi_tolerance * frob;
  double off = 0.0;
  bool converged = false;
  for (int sweep = 0; sweep <= opts.jacobi_max_sweeps; ++sweep) {
    off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * m[p * n + q] * m[p * n + q];
    }
    off = std::sqrt(off);
    if (off <= target) {
      converged = true;
      break;
    }
    if (sweep == opts.jacobi_max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(m, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(m, q, q) - at(m, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- A J
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(m, k, p);
          const double akq = at(m, k, q);
          at(m, k, p) = c * akp - s * akq;
          at(m, k, q) = s * akp + c * akq;
        }
        // A <- J^T A
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(m, p, k);
          const double aqk = at(m, q, k);
          at(m, p, k) = c * apk - s * aqk;
          at(m, q, k) = s * apk + c * aqk;
        }
        at(m, p, q) = 0.0;
        at(m, q, p) = 0.0;
        // V <- V J
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    throw ConvergenceError("Jacobi did not converge within " + std::to_string(opts.jacobi_max_sweeps) +
                               " sweeps",
                           off);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return m[x * n + x] < m[y * n + y]; });
  Eigensystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(m[k * n + k]);
    std::vector<double> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v[r * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

SpectralResult spectral_norm(const SymMatrix& a, const EigenOptions& opts) {
  SpectralResult out;
  const std::size_t n = a.dim();
  if (n == 0) return out;
  const bool nonnegative = a.is_nonnegative();

  if (n <= opts.jacobi_max_dim) {
    auto es = jacobi_eigensystem(a, opts);
    const double top = es.values.back();
    const double bottom = es.values.front();
    // Perron: for a nonnegative matrix the top eigenvalue is the spectral radius.
    const bool use_top = nonnegative || top >= -bottom;
    out.eigenvalue = use_top ? top : bottom;
    out.vector = use_top ? es.vectors.back() : es.vectors.front();
  } else if (nonnegative) {
    auto pr = shifted_power(a, 1.0, std::vector<double>(n, 1.0), opts);
    out.eigenvalue = pr.eigenvalue;
    out.vector = std::move(pr.vector);
  } else {
    auto hi = shifted_power(a, 1.0, pseudo_random_start(n), opts);
    auto lo = shifted_power(a, -1.0, pseudo_random_start(n), opts);
    const bool use_hi = hi.eigenvalue >= -lo.eigenvalue;
    auto& pick = use_hi ? hi : lo;
    out.eigenvalue = pick.eigenvalue;
    out.vector = std::move(pick.vector);
  }
  out.norm = std::abs(out.eigenvalue);
  orient(out.vector);
  out.residual = eigen_residual(a, out.vector, out.eigenvalue);
  return out;
}

SpectralResult principal_eigenvector(const SymMatrix& a, const EigenOptions& opts) {
  if (!a.is_nonnegative()) {
    throw std::invalid_argument("principal_eigenvector requires an entrywise-nonnegative matrix");
  }
  SpectralResult out;
  const std::size_t n = a.dim();
  if (n == 0) return out;
  if (n <= opts.jacobi_max_dim) {
    auto es = jacobi_eigensystem(a, opts);
    out.eigenvalue = es.values.back();
    out.vector = es.vectors.back();
  } else {
    auto pr = shifted_power(a, 1.0, std::vector<double>(n, 1.0), opts);
    out.eigenvalue = pr.eigenvalue;
    out.vector = std::move(pr.vector);
  }
  // For nonnegative A, |v| attains the same Rayleigh quotient as v, so the
  // entrywise absolute value of a top eigenvector is again a top eigenvector.
  for (double& x : out.vector) x = std::abs(x);
  normalize(out.vector);
  out.norm = std::abs(out.eigenvalue);
  out.residual = eigen_residual(a, out.vector, out.eigenvalue);
  return out;
}

}  // namespace advbound::specmat
