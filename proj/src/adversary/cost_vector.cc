#include "advbound/adversary/cost_vector.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace advbound::adversary {

CostVector::CostVector(std::vector<double> costs) : costs_(std::move(costs)) {
  if (costs_.empty()) throw std::invalid_argument("cost vector is empty");
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    if (!std::isfinite(costs_[i]) || !(costs_[i] > 0.0)) {
      throw std::invalid_argument("cost " + std::to_string(i + 1) + " must be positive and finite");
    }
  }
}

CostVector CostVector::ones(int n) {
  if (n < 1) throw std::invalid_argument("cost vector length must be >= 1");
  return CostVector(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

CostVector CostVector::scaled(double factor) const {
  std::vector<double> out = costs_;
  for (double& c : out) c *= factor;
  return CostVector(std::move(out));
}

CostVector CostVector::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > costs_.size()) throw std::out_of_range("cost slice outside vector");
  return CostVector(std::vector<double>(costs_.begin() + static_cast<std::ptrdiff_t>(offset),
                                        costs_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

}  // namespace advbound::adversary
