#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

/// A vector in GF(2)^n; coordinate i is node i (0-based).
///
/// Bits are packed little-endian into 64-bit blocks. Bits past length() in
/// the last block are always zero, so block-wise comparison and popcount
/// are exact.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t length);

  /// Parses a string of '0'/'1' characters. Throws DomainError on any other
  /// character or on an empty string.
  static BitWord from_string(std::string_view bits);
  /// Word of the given length with ones exactly at `ones`.
  static BitWord from_support(std::size_t length, std::span<const std::size_t> ones);
  static BitWord ones(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Index of the lowest set bit, or length() if zero.
  std::size_t first_one() const noexcept;

  BitWord& operator^=(const BitWord& other);
  BitWord& operator&=(const BitWord& other);

  std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }
  std::span<std::uint64_t> blocks() noexcept { return blocks_; }

  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  /// Orders by length, then lexicographically by coordinates 0..n-1.
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> blocks_;
};

std::size_t weight(const BitWord& w) noexcept;

/// Coordinate-wise XOR. Throws LengthMismatch.
BitWord add_words(const BitWord& v, const BitWord& w);

/// |v ∩ w|: coordinates where both are 1. Throws LengthMismatch.
std::size_t intersection_weight(const BitWord& v, const BitWord& w);

/// GF(2) inner product, i.e. intersection_weight mod 2.
bool inner_product(const BitWord& v, const BitWord& w);

/// Ascending 0-based indices of the 1-coordinates.
std::vector<std::size_t> support(const BitWord& w);

/// The word w restricted to the given coordinates, in the order given.
BitWord restrict_to(const BitWord& w, std::span<const std::size_t> coordinates);

}  // namespace nodal
