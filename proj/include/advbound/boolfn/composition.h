#pragma once

#include <utility>
#include <vector>

#include "advbound/boolfn/boolean_function.h"

namespace advbound::boolfn {

/// h = f o (g_1, ..., g_k) on disjoint consecutive input blocks.
class CompositionSpec {
 public:
  /// Throws std::invalid_argument unless outer.arity() == inner.size().
  CompositionSpec(BooleanFunction outer, std::vector<BooleanFunction> inner);

  const BooleanFunction& outer() const { return outer_; }
  const std::vector<BooleanFunction>& inner() const { return inner_; }
  const BooleanFunction& inner(std::size_t block) const { return inner_[block]; }
  std::size_t block_count() const { return inner_.size(); }

  /// 0-based start of each block in the concatenated input.
  const std::vector<int>& offsets() const { return offsets_; }
  int total_arity() const { return total_arity_; }

  /// Maps a 1-based global bit index to (block p, inner index q), both 1-based.
  std::pair<int, int> locate(int global_bit) const;

 private:
  BooleanFunction outer_;
  std::vector<BooleanFunction> inner_;
  std::vector<int> offsets_;
  int total_arity_ = 0;
};

struct SplitInput {
  std::vector<BitString> blocks;
  BitString tilde;
};

/// Cuts x into blocks and evaluates each inner function. Throws
/// std::out_of_range when a block lies outside its inner domain.
SplitInput split_input(const BitString& x, const CompositionSpec& spec);

/// Domain: every block in its inner domain and the inner outputs in the outer
/// domain. Throws std::invalid_argument if the total arity exceeds `size_cap`.
BooleanFunction compose_functions(const CompositionSpec& spec, int size_cap = kDefaultSizeCap);

/// f^1 = f, f^{d+1} = f o (f^d, ..., f^d). Requires f total and n^d <= size_cap.
BooleanFunction iterate_function(const BooleanFunction& f, int depth,
                                 int size_cap = kDefaultSizeCap);

/// Moves bit j of x to position perm[j-1]. `perm` is a permutation of 1..n.
BitString permute_bits(const BitString& x, const std::vector<int>& perm);
/// g(permute_bits(x, perm)) = f(x) for every x in the domain of f.
BooleanFunction permute_inputs(const BooleanFunction& f, const std::vector<int>& perm);

}  // namespace advbound::boolfn
