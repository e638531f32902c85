#pragma once

#include <span>
#include <vector>

#include "advbound/boolfn/bit_string.h"

namespace advbound::specmat {

using boolfn::BitString;

/// Dense real symmetric matrix whose rows and columns are labeled by bit
/// strings. Writes go through set(), which updates both triangles, so
/// symmetry holds exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Zero matrix. Throws std::invalid_argument on duplicate or ragged labels.
  explicit SymMatrix(std::vector<BitString> labels);

  /// Throws std::invalid_argument unless `rows` is square, matches the labels
  /// and is exactly symmetric.
  static SymMatrix from_rows(std::vector<BitString> labels,
                             const std::vector<std::vector<double>>& rows);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<BitString>& labels() const { return labels_; }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * dim() + c]; }
  void set(std::size_t r, std::size_t c, double v) {
    data_[r * dim() + c] = v;
    data_[c * dim() + r] = v;
  }
  /// Row-major storage, dim() * dim() entries.
  std::span<const double> data() const { return data_; }

  bool is_nonnegative() const;
  bool is_zero() const;
  double frobenius_norm() const;
  double max_abs_row_sum() const;

  /// y = A x.
  std::vector<double> multiply(std::span<const double> x) const;
  SymMatrix scaled(double factor) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::vector<BitString> labels_;
  std::vector<double> data_;
};

/// Entrywise product. Throws std::invalid_argument on label mismatch.
SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b);

/// D_i[x,y] = 1 iff x and y differ in (1-based) position i.
SymMatrix difference_mask(const std::vector<BitString>& labels, int i);

/// Every entry equal to one.
SymMatrix all_ones(const std::vector<BitString>& labels);

}  // namespace advbound::specmat
