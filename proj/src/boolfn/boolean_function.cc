#include "advbound/boolfn/boolean_function.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace advbound::boolfn {

BooleanFunction::BooleanFunction(int arity, std::vector<Row> rows) : arity_(arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw std::invalid_argument("arity " + std::to_string(arity) + " outside 1.." +
                                std::to_string(kMaxArity));
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.first < b.first; });
  index_.assign(std::size_t{1} << arity, -1);
  domain_.reserve(rows.size());
  values_.reserve(rows.size());
  for (const auto& [x, v] : rows) {
    if (x.length() != arity) {
      throw std::invalid_argument("row '" + x.str() + "' has length " + std::to_string(x.length()) +
                                  ", expected " + std::to_string(arity));
    }
    if (v != 0 && v != 1) {
      throw std::invalid_argument("row '" + x.str() + "' has value " + std::to_string(v));
    }
    if (index_[x.code()] >= 0) {
      throw std::invalid_argument("duplicate row '" + x.str() + "'");
    }
    index_[x.code()] = static_cast<std::int32_t>(domain_.size());
    domain_.push_back(x);
    values_.push_back(static_cast<std::uint8_t>(v));
  }
}

BooleanFunction BooleanFunction::total(int arity,
                                       const std::function<int(const BitString&)>& fn) {
  if (arity < 1 || arity > kMaxArity) {
    throw std::invalid_argument("arity " + std::to_string(arity) + " outside 1.." +
                                std::to_string(kMaxArity));
  }
  std::vector<Row> rows;
  const std::uint32_t count = 1u << arity;
  rows.reserve(count);
  for (std::uint32_t code = 0; code < count; ++code) {
    BitString x(code, arity);
    rows.emplace_back(x, fn(x));
  }
  return BooleanFunction(arity, std::move(rows));
}

std::optional<std::size_t> BooleanFunction::index_of(const BitString& x) const {
  if (x.length() != arity_ || arity_ == 0) return std::nullopt;
  const auto k = index_[x.code()];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

int BooleanFunction::operator()(const BitString& x) const {
  auto k = index_of(x);
  if (!k) throw std::out_of_range("input '" + x.str() + "' is outside the function domain");
  return values_[*k];
}

bool BooleanFunction::is_constant() const {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) ==
         values_.end();
}

BooleanFunction BooleanFunction::negated() const {
  std::vector<Row> rows;
  rows.reserve(domain_.size());
  for (std::size_t k = 0; k < domain_.size(); ++k) rows.emplace_back(domain_[k], 1 - values_[k]);
  return BooleanFunction(arity_, std::move(rows));
}

Family parse_family(std::string_view name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "and") return Family::kAnd;
  if (lower == "or") return Family::kOr;
  if (lower == "parity" || lower == "xor") return Family::kParity;
  if (lower == "nand") return Family::kNand;
  if (lower == "id") return Family::kId;
  throw std::invalid_argument("unknown function family '" + std::string(name) + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kAnd: return "AND";
    case Family::kOr: return "OR";
    case Family::kParity: return "PARITY";
    case Family::kNand: return "NAND";
    case Family::kId: return "ID";
  }
  return "?";
}

BooleanFunction make_family(Family family, int n) {
  if (n < 1) throw std::invalid_argument("family arity must be >= 1");
  const std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1u);
  switch (family) {
    case Family::kAnd:
      return BooleanFunction::total(n, [all](const BitString& x) { return x.code() == all ? 1 : 0; });
    case Family::kNand:
      return BooleanFunction::total(n, [all](const BitString& x) { return x.code() == all ? 0 : 1; });
    case Family::kOr:
      return BooleanFunction::total(n, [](const BitString& x) { return x.code() != 0 ? 1 : 0; });
    case Family::kParity:
      return BooleanFunction::total(n, [](const BitString& x) { return std::popcount(x.code()) & 1; });
    case Family::kId:
      if (n != 1) throw std::invalid_argument("ID is defined only for n = 1");
      return BooleanFunction::total(1, [](const BitString& x) { return x.bit(1); });
  }
  throw std::invalid_argument("unknown function family");
}

BooleanFunction make_family(std::string_view name, int n) { return make_family(parse_family(name), n); }

}  // namespace advbound::boolfn
