#pragma once

#include <span>
#include <vector>

namespace advbound::adversary {

/// Strictly positive, finite per-bit query costs.
class CostVector {
 public:
  /// Throws std::invalid_argument on an empty vector or a non-positive or
  /// non-finite entry.
  explicit CostVector(std::vector<double> costs);

  static CostVector ones(int n);

  std::size_t size() const { return costs_.size(); }
  /// 0-based.
  double operator[](std::size_t i) const { return costs_[i]; }
  std::span<const double> values() const { return costs_; }

  CostVector scaled(double factor) const;
  /// Costs of the block of `count` bits starting at 0-based `offset`.
  CostVector slice(std::size_t offset, std::size_t count) const;

  friend bool operator==(const CostVector&, const CostVector&) = default;

 private:
  std::vector<double> costs_;
};

}  // namespace advbound::adversary
