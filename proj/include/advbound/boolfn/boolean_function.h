#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "advbound/boolfn/bit_string.h"

namespace advbound::boolfn {

/// Largest arity a BooleanFunction may be built with. Operations that build
/// functions by enumeration take their own (smaller) size cap.
inline constexpr int kMaxArity = 20;
/// Default cap on the total arity produced by composition and iteration.
inline constexpr int kDefaultSizeCap = 12;

/// A possibly partial map S -> {0,1} with S a subset of {0,1}^n.
///
/// The domain is kept sorted lexicographically; positions into domain() are
/// the row/column indices used by every matrix built over the function.
/// Instances are immutable once constructed.
class BooleanFunction {
 public:
  using Row = std::pair<BitString, int>;

  BooleanFunction() = default;

  /// Builds from explicit rows. Throws std::invalid_argument on duplicate
  /// strings, wrong lengths or values outside {0,1}.
  BooleanFunction(int arity, std::vector<Row> rows);

  /// Total function on {0,1}^arity.
  static BooleanFunction total(int arity, const std::function<int(const BitString&)>& fn);

  int arity() const { return arity_; }
  std::size_t size() const { return domain_.size(); }
  const std::vector<BitString>& domain() const { return domain_; }
  const std::vector<std::uint8_t>& values() const { return values_; }
  int value_at(std::size_t index) const { return values_[index]; }

  bool contains(const BitString& x) const { return index_of(x).has_value(); }
  std::optional<std::size_t> index_of(const BitString& x) const;

  /// Throws std::out_of_range when x is outside the domain.
  int operator()(const BitString& x) const;

  bool is_total() const { return domain_.size() == (std::size_t{1} << arity_); }
  bool is_constant() const;

  /// Same domain, outputs flipped.
  BooleanFunction negated() const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.arity_ == b.arity_ && a.domain_ == b.domain_ && a.values_ == b.values_;
  }

 private:
  int arity_ = 0;
  std::vector<BitString> domain_;
  std::vector<std::uint8_t> values_;
  std::vector<std::int32_t> index_;  // dense code -> position, -1 if absent
};

enum class Family { kAnd, kOr, kParity, kNand, kId };

/// Case-insensitive; throws std::invalid_argument on an unknown name.
Family parse_family(std::string_view name);
std::string family_name(Family family);

/// The named total function on n bits. ID is defined only for n = 1.
BooleanFunction make_family(Family family, int n);
BooleanFunction make_family(std::string_view name, int n);

}  // namespace advbound::boolfn
