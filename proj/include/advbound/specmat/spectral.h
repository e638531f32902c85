#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "advbound/specmat/sym_matrix.h"

namespace advbound::specmat {

struct EigenOptions {
  /// Cyclic Jacobi is used up to this dimension, shifted power iteration above.
  std::size_t jacobi_max_dim = 256;
  /// Stop sweeping once the off-diagonal Frobenius norm is below
  /// jacobi_tolerance * ||A||_F.
  double jacobi_tolerance = 1e-12;
  int jacobi_max_sweeps = 100;
  /// Power iteration stops once ||Av - lambda v|| <= power_tolerance * max(1, |lambda|).
  double power_tolerance = 1e-10;
  long power_max_iterations = 100000;
};

struct SpectralResult {
  /// max |eigenvalue|.
  double norm = 0.0;
  /// Signed eigenvalue whose absolute value is `norm`.
  double eigenvalue = 0.0;
  /// Unit eigenvector for `eigenvalue`; empty when dim = 0.
  std::vector<double> vector;
  /// ||A vector - eigenvalue vector||_2.
  double residual = 0.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (achieved residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Full eigendecomposition by cyclic Jacobi rotations. Eigenvalues ascend;
/// vectors[k] is the unit eigenvector of values[k].
struct Eigensystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
Eigensystem jacobi_eigensystem(const SymMatrix& a, const EigenOptions& opts = {});

/// Spectral norm with its eigenvector, oriented so the largest-magnitude
/// entry is positive (lowest index wins ties).
SpectralResult spectral_norm(const SymMatrix& a, const EigenOptions& opts = {});

/// Largest eigenvalue of an entrywise-nonnegative matrix and an eigenvector
/// with all entries >= 0. Throws std::invalid_argument on a negative entry.
SpectralResult principal_eigenvector(const SymMatrix& a, const EigenOptions& opts = {});

/// ||A v - lambda v||_2.
double eigen_residual(const SymMatrix& a, std::span<const double> v, double lambda);

double euclidean_norm(std::span<const double> v);

}  // namespace advbound::specmat
