#include "advbound/specmat/sym_matrix.h"

#include <cmath>
#include <set>
#include <stdexcept>

namespace advbound::specmat {

SymMatrix::SymMatrix(std::vector<BitString> labels) : labels_(std::move(labels)) {
  std::set<BitString> seen;
  for (const auto& l : labels_) {
    if (l.length() != labels_.front().length()) {
      throw std::invalid_argument("matrix labels have different lengths");
    }
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate matrix label '" + l.str() + "'");
  }
  data_.assign(labels_.size() * labels_.size(), 0.0);
}

SymMatrix SymMatrix::from_rows(std::vector<BitString> labels,
                               const std::vector<std::vector<double>>& rows) {
  SymMatrix m(std::move(labels));
  const std::size_t n = m.dim();
  if (rows.size() != n) throw std::invalid_argument("matrix has wrong number of rows");
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("matrix row " + std::to_string(r) + " has wrong length");
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      // Exact comparison: symmetric storage must reproduce the input bit for bit.
      if (rows[r][c] != rows[c][r] && !(std::isnan(rows[r][c]) && std::isnan(rows[c][r]))) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ")");
      }
      m.set(r, c, rows[r][c]);
    }
  }
  return m;
}

bool SymMatrix::is_nonnegative() const {
  for (double v : data_) {
    if (!(v >= 0.0)) return false;
  }
  return true;
}

bool SymMatrix::is_zero() const {
  for (double v : data_) {
    if (v != 0.0) return false;
  }
  return true;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::max_abs_row_sum() const {
  double best = 0.0;
  const std::size_t n = dim();
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s += std::abs(data_[r * n + c]);
    best = std::max(best, s);
  }
  return best;
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw std::invalid_argument("vector length does not match matrix");
  std::vector<double> y(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = &data_[r * n];
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s += row[c] * x[c];
    y[r] = s;
  }
  return y;
}

SymMatrix SymMatrix::scaled(double factor) const {
  SymMatrix out = *this;
  for (double& v : out.data_) v *= factor;
  return out;
}

SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b) {
  if (a.labels() != b.labels()) throw std::invalid_argument("hadamard: label sequences differ");
  SymMatrix out(a.labels());
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) out.set(r, c, a(r, c) * b(r, c));
  }
  return out;
}

SymMatrix difference_mask(const std::vector<BitString>& labels, int i) {
  SymMatrix out(labels);
  const int len = labels.empty() ? 0 : labels.front().length();
  if (i < 1 || i > len) {
    throw std::out_of_range("mask index " + std::to_string(i) + " outside 1.." + std::to_string(len));
  }
  for (std::size_t r = 0; r < labels.size(); ++r) {
    for (std::size_t c = r + 1; c < labels.size(); ++c) {
      if (labels[r].bit(i) != labels[c].bit(i)) out.set(r, c, 1.0);
    }
  }
  return out;
}

SymMatrix all_ones(const std::vector<BitString>& labels) {
  SymMatrix out(labels);
  for (std::size_t r = 0; r < labels.size(); ++r) {
    for (std::size_t c = r; c < labels.size(); ++c) out.set(r, c, 1.0);
  }
  return out;
}

}  // namespace advbound::specmat
