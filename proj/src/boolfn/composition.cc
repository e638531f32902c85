#include "advbound/boolfn/composition.h"

#include <stdexcept>

namespace advbound::boolfn {

CompositionSpec::CompositionSpec(BooleanFunction outer, std::vector<BooleanFunction> inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.empty()) throw std::invalid_argument("composition needs at least one inner function");
  if (static_cast<std::size_t>(outer_.arity()) != inner_.size()) {
    throw std::invalid_argument("outer arity " + std::to_string(outer_.arity()) + " but " +
                                std::to_string(inner_.size()) + " inner functions");
  }
  offsets_.reserve(inner_.size());
  for (const auto& g : inner_) {
    offsets_.push_back(total_arity_);
    total_arity_ += g.arity();
  }
}

std::pair<int, int> CompositionSpec::locate(int global_bit) const {
  if (global_bit < 1 || global_bit > total_arity_) {
    throw std::out_of_range("bit index " + std::to_string(global_bit) + " outside 1.." +
                            std::to_string(total_arity_));
  }
  for (std::size_t p = inner_.size(); p-- > 0;) {
    if (global_bit > offsets_[p]) {
      return {static_cast<int>(p) + 1, global_bit - offsets_[p]};
    }
  }
  throw std::logic_error("unreachable");
}

SplitInput split_input(const BitString& x, const CompositionSpec& spec) {
  if (x.length() != spec.total_arity()) {
    throw std::invalid_argument("input '" + x.str() + "' has length " + std::to_string(x.length()) +
                                ", expected " + std::to_string(spec.total_arity()));
  }
  SplitInput out;
  out.blocks.reserve(spec.block_count());
  std::uint32_t tilde = 0;
  for (std::size_t i = 0; i < spec.block_count(); ++i) {
    const auto& g = spec.inner(i);
    auto block = x.slice(spec.offsets()[i], g.arity());
    auto k = g.index_of(block);
    if (!k) {
      throw std::out_of_range("block " + std::to_string(i + 1) + " = '" + block.str() +
                              "' is outside the domain of inner function " + std::to_string(i + 1));
    }
    tilde = (tilde << 1) | static_cast<std::uint32_t>(g.value_at(*k));
    out.blocks.push_back(block);
  }
  out.tilde = BitString(tilde, static_cast<int>(spec.block_count()));
  return out;
}

BooleanFunction compose_functions(const CompositionSpec& spec, int size_cap) {
  const int n = spec.total_arity();
  if (n > size_cap) {
    throw std::invalid_argument("composed arity " + std::to_string(n) + " exceeds size cap " +
                                std::to_string(size_cap));
  }
  std::vector<BooleanFunction::Row> rows;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t code = 0; code < count; ++code) {
    BitString x(code, n);
    std::uint32_t tilde = 0;
    bool inside = true;
    for (std::size_t i = 0; i < spec.block_count() && inside; ++i) {
      const auto& g = spec.inner(i);
      auto k = g.index_of(x.slice(spec.offsets()[i], g.arity()));
      if (!k) {
        inside = false;
        break;
      }
      tilde = (tilde << 1) | static_cast<std::uint32_t>(g.value_at(*k));
    }
    if (!inside) continue;
    auto ko = spec.outer().index_of(BitString(tilde, static_cast<int>(spec.block_count())));
    if (!ko) continue;
    rows.emplace_back(x, spec.outer().value_at(*ko));
  }
  return BooleanFunction(n, std::move(rows));
}

BooleanFunction iterate_function(const BooleanFunction& f, int depth, int size_cap) {
  if (depth < 1) throw std::invalid_argument("iteration depth must be >= 1");
  if (!f.is_total()) throw std::invalid_argument("iteration requires a total function");
  long long arity = f.arity();
  for (int d = 1; d < depth; ++d) {
    arity *= f.arity();
    if (arity > size_cap) break;
  }
  if (arity > size_cap) {
    throw std::invalid_argument("n^d exceeds size cap " + std::to_string(size_cap));
  }
  BooleanFunction current = f;
  for (int d = 1; d < depth; ++d) {
    CompositionSpec spec(f, std::vector<BooleanFunction>(static_cast<std::size_t>(f.arity()), current));
    current = compose_functions(spec, size_cap);
  }
  return current;
}

BitString permute_bits(const BitString& x, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != x.length()) {
    throw std::invalid_argument("permutation length does not match bit string");
  }
  BitString y(0, x.length());
  for (int j = 1; j <= x.length(); ++j) y = y.with_bit(perm[static_cast<std::size_t>(j - 1)], x.bit(j));
  return y;
}

BooleanFunction permute_inputs(const BooleanFunction& f, const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size() + 1, false);
  if (static_cast<int>(perm.size()) != f.arity()) {
    throw std::invalid_argument("permutation length does not match arity");
  }
  for (int p : perm) {
    if (p < 1 || p > f.arity() || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<BooleanFunction::Row> rows;
  rows.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    rows.emplace_back(permute_bits(f.domain()[k], perm), f.value_at(k));
  }
  return BooleanFunction(f.arity(), std::move(rows));
}

}  // namespace advbound::boolfn
