#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace advbound::boolfn {

/// A fixed-length string of bits. Position 1 is the leftmost character of the
/// textual form and the most significant bit of code().
class BitString {
 public:
  static constexpr int kMaxLength = 30;

  BitString() = default;
  BitString(std::uint32_t code, int length);

  /// Parses "0101". Throws std::invalid_argument on any other character.
  static BitString parse(std::string_view text);

  int length() const { return length_; }
  std::uint32_t code() const { return code_; }

  /// 1-based bit access.
  int bit(int position) const;
  BitString with_bit(int position, int value) const;
  BitString complement() const;

  /// Consecutive substring starting at 0-based `offset`.
  BitString slice(int offset, int count) const;
  BitString concat(const BitString& tail) const;

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  std::uint32_t code_ = 0;
  int length_ = 0;
};

/// Number of positions in which `a` and `b` differ (equal lengths assumed).
int hamming_distance(const BitString& a, const BitString& b);

}  // namespace advbound::boolfn
