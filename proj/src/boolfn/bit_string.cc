#include "advbound/boolfn/bit_string.h"

#include <bit>
#include <stdexcept>

namespace advbound::boolfn {

BitString::BitString(std::uint32_t code, int length) : code_(code), length_(length) {
  if (length < 0 || length > kMaxLength) {
    throw std::invalid_argument("bit string length " + std::to_string(length) + " out of range");
  }
  if (length < 32 && (code >> length) != 0) {
    throw std::invalid_argument("bit string code has bits beyond its length");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("bit string '" + std::string(text) + "' is too long");
  }
  std::uint32_t code = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string '" + std::string(text) + "' contains '" +
                                  std::string(1, c) + "'");
    }
    code = (code << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitString(code, static_cast<int>(text.size()));
}

int BitString::bit(int position) const {
  if (position < 1 || position > length_) {
    throw std::out_of_range("bit position " + std::to_string(position) + " outside 1.." +
                            std::to_string(length_));
  }
  return static_cast<int>((code_ >> (length_ - position)) & 1u);
}

BitString BitString::with_bit(int position, int value) const {
  bit(position);  // range check
  const std::uint32_t mask = 1u << (length_ - position);
  return BitString(value ? (code_ | mask) : (code_ & ~mask), length_);
}

BitString BitString::complement() const {
  const std::uint32_t all = length_ == 0 ? 0u : ((1u << length_) - 1u);
  return BitString(~code_ & all, length_);
}

BitString BitString::slice(int offset, int count) const {
  if (offset < 0 || count < 0 || offset + count > length_) {
    throw std::out_of_range("slice outside bit string");
  }
  const int shift = length_ - offset - count;
  const std::uint32_t mask = count == 0 ? 0u : ((1u << count) - 1u);
  return BitString((code_ >> shift) & mask, count);
}

BitString BitString::concat(const BitString& tail) const {
  return BitString((code_ << tail.length_) | tail.code_, length_ + tail.length_);
}

std::string BitString::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((code_ >> (length_ - 1 - i)) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

int hamming_distance(const BitString& a, const BitString& b) {
  return std::popcount(a.code() ^ b.code());
}

}  // namespace advbound::boolfn
