#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "nodal/bit_word.hpp"

namespace nodal {

/// Limits for exhaustive enumeration over the 2^k message space.
struct EnumerationOptions {
  /// Largest dimension that will be enumerated.
  std::size_t max_dimension = 30;
  /// Worker threads for aggregate queries; 0 means hardware concurrency.
  /// Results never depend on this value.
  unsigned threads = 1;
};

/// A subspace of GF(2)^n, stored by its reduced row-echelon basis.
///
/// Because the RREF basis is unique, two codes are the same subspace iff
/// they compare equal.
class LinearCode {
 public:
  /// The zero code {0} of the given length.
  static LinearCode zero(std::size_t length);
  /// The whole ambient space GF(2)^n.
  static LinearCode full(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::span<const BitWord> basis() const noexcept { return basis_; }
  /// Pivot column of each basis row, strictly increasing.
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

  bool contains(const BitWord& w) const;

  /// Codeword of message index t: the sum of basis rows i for which bit
  /// (k-1-i) of t is set. t ranges over [0, 2^k).
  BitWord encode(std::uint64_t message) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  friend LinearCode code_from_rows(std::span<const BitWord> rows, std::size_t length);

  LinearCode(std::size_t length, std::vector<BitWord> basis, std::vector<std::size_t> pivots)
      : length_(length), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t length_ = 0;
  std::vector<BitWord> basis_;
  std::vector<std::size_t> pivots_;
};

/// Span of `rows` (which may be dependent). Throws DomainError on an empty
/// list and LengthMismatch on rows of different lengths.
LinearCode code_from_rows(std::span<const BitWord> rows);
/// As above, with the ambient length given so that an empty list is valid.
LinearCode code_from_rows(std::span<const BitWord> rows, std::size_t length);

/// Convenience for literal generator matrices.
LinearCode code_from_strings(std::initializer_list<std::string_view> rows);

/// Input range over all 2^k codewords in message order (zero word first).
class CodewordRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BitWord;
    using difference_type = std::ptrdiff_t;
    using pointer = const BitWord*;
    using reference = const BitWord&;

    iterator() = default;
    reference operator*() const { return word_; }
    pointer operator->() const { return &word_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    friend class CodewordRange;
    iterator(const CodewordRange* range, std::uint64_t index, BitWord word)
        : range_(range), index_(index), word_(std::move(word)) {}

    const CodewordRange* range_ = nullptr;
    std::uint64_t index_ = 0;
    BitWord word_;
  };

  iterator begin() const;
  iterator end() const;
  std::uint64_t size() const noexcept { return std::uint64_t{1} << code_.dimension(); }

 private:
  friend CodewordRange enumerate_codewords(const LinearCode&, const EnumerationOptions&);
  CodewordRange(LinearCode code, std::vector<BitWord> deltas)
      : code_(std::move(code)), deltas_(std::move(deltas)) {}

  LinearCode code_;
  // deltas_[j] = XOR of the last j+1 basis rows: the change from message t
  // to t+1 when t has exactly j trailing one bits.
  std::vector<BitWord> deltas_;
};

/// Lazily enumerates every codeword. The range holds its own copy of the code.
/// Throws EnumerationLimit when dimension() > options.max_dimension.
CodewordRange enumerate_codewords(const LinearCode& code, const EnumerationOptions& options = {});

/// Calls fn(word) for every codeword in message order.
void for_each_codeword(const LinearCode& code, const std::function<void(const BitWord&)>& fn,
                       const EnumerationOptions& options = {});

struct WeightDistribution {
  std::size_t length = 0;
  /// weight -> number of codewords; only nonzero counts are stored.
  std::map<std::size_t, std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t count(std::size_t weight) const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});

/// Minimum weight over nonzero codewords. Throws DomainError for k = 0.
std::size_t minimum_distance(const LinearCode& code, const EnumerationOptions& options = {});

/// Canonical basis of C^perp; dim C + dim C^perp = n.
LinearCode dual_code(const LinearCode& code);

enum class ParityClass { not_even, even, doubly_even };

std::string_view to_string(ParityClass parity) noexcept;

/// Strongest of even/doubly-even that holds for every codeword, checked
/// over all 2^k words.
ParityClass classify_parity(const LinearCode& code, const EnumerationOptions& options = {});

/// C ⊆ C^perp, from pairwise intersections of basis rows.
bool is_self_orthogonal(const LinearCode& code);

struct Projection {
  /// Image code C_w, of length |w|, in the coordinates of support(w).
  LinearCode image;
  std::size_t kernel_dimension = 0;
};

/// Projection v -> v ∩ w onto the support of the codeword w. Throws
/// DomainError if w is not in the code.
Projection project_onto_support(const LinearCode& code, const BitWord& w);

}  // namespace nodal
