#include "nodal/bit_word.hpp"

#include <algorithm>
#include <bit>

#include "nodal/error.hpp"

namespace nodal {
namespace {

constexpr std::size_t kBlockBits = 64;

std::size_t block_count(std::size_t length) { return (length + kBlockBits - 1) / kBlockBits; }

void require_same_length(const BitWord& v, const BitWord& w) {
  if (v.length() != w.length()) throw LengthMismatch(v.length(), w.length());
}

}  // namespace

BitWord::BitWord(std::size_t length) : length_(length), blocks_(block_count(length), 0) {}

BitWord BitWord::from_string(std::string_view bits) {
  if (bits.empty()) throw DomainError("empty bit string");
  BitWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i);
    } else if (bits[i] != '0') {
      throw DomainError("invalid character '" + std::string(1, bits[i]) + "' in bit string");
    }
  }
  return w;
}

BitWord BitWord::from_support(std::size_t length, std::span<const std::size_t> ones) {
  BitWord w(length);
  for (std::size_t i : ones) w.set(i);
  return w;
}

BitWord BitWord::ones(std::size_t length) {
  BitWord w(length);
  for (std::size_t i = 0; i < length; ++i) w.set(i);
  return w;
}

bool BitWord::test(std::size_t i) const {
  if (i >= length_) throw DomainError("coordinate " + std::to_string(i) + " out of range");
  return (blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1U;
}

void BitWord::set(std::size_t i, bool value) {
  if (i >= length_) throw DomainError("coordinate " + std::to_string(i) + " out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kBlockBits);
  if (value) {
    blocks_[i / kBlockBits] |= mask;
  } else {
    blocks_[i / kBlockBits] &= ~mask;
  }
}

void BitWord::flip(std::size_t i) { set(i, !test(i)); }

std::size_t BitWord::weight() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool BitWord::is_zero() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
}

std::size_t BitWord::first_one() const noexcept {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b] != 0) return b * kBlockBits + static_cast<std::size_t>(std::countr_zero(blocks_[b]));
  }
  return length_;
}

BitWord& BitWord::operator^=(const BitWord& other) {
  require_same_length(*this, other);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] ^= other.blocks_[b];
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
  require_same_length(*this, other);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= other.blocks_[b];
  return *this;
}

std::string BitWord::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (std::size_t i = 0; i < a.length_; ++i) {
    const bool x = a.test(i);
    const bool y = b.test(i);
    if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t weight(const BitWord& w) noexcept { return w.weight(); }

BitWord add_words(const BitWord& v, const BitWord& w) {
  BitWord sum = v;
  sum ^= w;
  return sum;
}

std::size_t intersection_weight(const BitWord& v, const BitWord& w) {
  require_same_length(v, w);
  std::size_t total = 0;
  const auto a = v.blocks();
  const auto b = w.blocks();
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool inner_product(const BitWord& v, const BitWord& w) { return intersection_weight(v, w) % 2 == 1; }

std::vector<std::size_t> support(const BitWord& w) {
  std::vector<std::size_t> out;
  out.reserve(w.weight());
  const auto blocks = w.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::uint64_t bits = blocks[b];
    while (bits != 0) {
      out.push_back(b * kBlockBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BitWord restrict_to(const BitWord& w, std::span<const std::size_t> coordinates) {
  BitWord out(coordinates.size());
  for (std::size_t j = 0; j < coordinates.size(); ++j) {
    if (w.test(coordinates[j])) out.set(j);
  }
  return out;
}

}  // namespace nodal
