#include "nodal/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "nodal/error.hpp"

namespace nodal {
namespace {

void require_enumerable(const LinearCode& code, const EnumerationOptions& options) {
  const std::size_t hard_cap = 62;
  const std::size_t cap = std::min(options.max_dimension, hard_cap);
  if (code.dimension() > cap) throw EnumerationLimit(code.dimension(), cap);
}

// deltas[j] = XOR of basis rows k-1-j .. k-1.
std::vector<BitWord> suffix_deltas(const LinearCode& code) {
  const auto basis = code.basis();
  std::vector<BitWord> deltas;
  deltas.reserve(basis.size());
  BitWord acc(code.length());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    acc ^= basis[basis.size() - 1 - j];
    deltas.push_back(acc);
  }
  return deltas;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Weight histogram of messages [lo, hi), walking the message order with one
// XOR per step.
std::vector<std::uint64_t> histogram_range(const LinearCode& code, const std::vector<BitWord>& deltas,
                                           std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> hist(code.length() + 1, 0);
  if (lo >= hi) return hist;
  BitWord word = code.encode(lo);
  auto blocks = word.blocks();
  for (std::uint64_t t = lo;;) {
    std::size_t w = 0;
    for (std::uint64_t b : blocks) w += static_cast<std::size_t>(std::popcount(b));
    ++hist[w];
    if (++t == hi) break;
    const auto delta = deltas[static_cast<std::size_t>(std::countr_zero(t))].blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] ^= delta[i];
  }
  return hist;
}

}  // namespace

LinearCode LinearCode::zero(std::size_t length) { return code_from_rows({}, length); }

LinearCode LinearCode::full(std::size_t length) {
  std::vector<BitWord> rows;
  rows.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    BitWord e(length);
    e.set(i);
    rows.push_back(std::move(e));
  }
  return code_from_rows(rows, length);
}

bool LinearCode::contains(const BitWord& w) const {
  if (w.length() != length_) throw LengthMismatch(length_, w.length());
  BitWord r = w;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (r.test(pivots_[i])) r ^= basis_[i];
  }
  return r.is_zero();
}

BitWord LinearCode::encode(std::uint64_t message) const {
  const std::size_t k = basis_.size();
  if (k < 64 && (message >> k) != 0) throw DomainError("message index out of range for dimension " + std::to_string(k));
  BitWord w(length_);
  for (std::size_t i = 0; i < k; ++i) {
    if ((message >> (k - 1 - i)) & 1U) w ^= basis_[i];
  }
  return w;
}

LinearCode code_from_rows(std::span<const BitWord> rows) {
  if (rows.empty()) throw DomainError("cannot infer code length from an empty row list");
  return code_from_rows(rows, rows.front().length());
}

LinearCode code_from_rows(std::span<const BitWord> rows, std::size_t length) {
  std::vector<BitWord> work;
  work.reserve(rows.size());
  for (const BitWord& r : rows) {
    if (r.length() != length) throw LengthMismatch(length, r.length());
    if (!r.is_zero()) work.push_back(r);
  }

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length && rank < work.size(); ++col) {
    auto it = std::find_if(work.begin() + static_cast<std::ptrdiff_t>(rank), work.end(),
                           [col](const BitWord& r) { return r.test(col); });
    if (it == work.end()) continue;
    std::iter_swap(work.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != rank && work[r].test(col)) work[r] ^= work[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  work.resize(rank);
  return LinearCode(length, std::move(work), std::move(pivots));
}

LinearCode code_from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitWord> words;
  words.reserve(rows.size());
  for (std::string_view r : rows) words.push_back(BitWord::from_string(r));
  return code_from_rows(words);
}

CodewordRange::iterator& CodewordRange::iterator::operator++() {
  if (++index_ < range_->size()) {
    word_ ^= range_->deltas_[static_cast<std::size_t>(std::countr_zero(index_))];
  }
  return *this;
}

CodewordRange::iterator CodewordRange::begin() const { return iterator(this, 0, BitWord(code_.length())); }

CodewordRange::iterator CodewordRange::end() const { return iterator(this, size(), BitWord()); }

CodewordRange enumerate_codewords(const LinearCode& code, const EnumerationOptions& options) {
  require_enumerable(code, options);
  return CodewordRange(code, suffix_deltas(code));
}

void for_each_codeword(const LinearCode& code, const std::function<void(const BitWord&)>& fn,
                       const EnumerationOptions& options) {
  for (const BitWord& w : enumerate_codewords(code, options)) fn(w);
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (const auto& [w, c] : counts) sum += c;
  return sum;
}

std::uint64_t WeightDistribution::count(std::size_t weight) const {
  auto it = counts.find(weight);
  return it == counts.end() ? 0 : it->second;
}

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
  require_enumerable(code, options);
  const auto deltas = suffix_deltas(code);
  const std::uint64_t total = std::uint64_t{1} << code.dimension();

  // Small spaces are not worth a thread.
  const std::uint64_t min_chunk = std::uint64_t{1} << 12;
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(options.threads), total / min_chunk));

  std::vector<std::vector<std::uint64_t>> partial(workers);
  if (workers == 1) {
    partial[0] = histogram_range(code, deltas, 0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t i = 0; i < workers; ++i) {
      const std::uint64_t lo = total / workers * i;
      const std::uint64_t hi = (i + 1 == workers) ? total : total / workers * (i + 1);
      pool.emplace_back([&, i, lo, hi] { partial[i] = histogram_range(code, deltas, lo, hi); });
    }
    for (auto& t : pool) t.join();
  }

  WeightDistribution dist;
  dist.length = code.length();
  for (std::size_t w = 0; w <= code.length(); ++w) {
    std::uint64_t c = 0;
    for (const auto& h : partial) c += h[w];
    if (c != 0) dist.counts.emplace(w, c);
  }
  return dist;
}

std::size_t minimum_distance(const LinearCode& code, const EnumerationOptions& options) {
  if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
  const auto dist = weight_distribution(code, options);
  return std::next(dist.counts.begin())->first;
}

LinearCode dual_code(const LinearCode& code) {
  const std::size_t n = code.length();
  const auto basis = code.basis();
  const auto pivots = code.pivots();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<BitWord> rows;
  rows.reserve(n - basis.size());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitWord v(n);
    v.set(f);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].test(f)) v.set(pivots[i]);
    }
    rows.push_back(std::move(v));
  }
  return code_from_rows(rows, n);
}

std::string_view to_string(ParityClass parity) noexcept {
  switch (parity) {
    case ParityClass::not_even:
      return "not-even";
    case ParityClass::even:
      return "even";
    case ParityClass::doubly_even:
      return "doubly-even";
  }
  return "unknown";
}

ParityClass classify_parity(const LinearCode& code, const EnumerationOptions& options) {
  const auto dist = weight_distribution(code, options);
  bool even = true;
  bool doubly = true;
  for (const auto& [w, c] : dist.counts) {
    even = even && w % 2 == 0;
    doubly = doubly && w % 4 == 0;
  }
  if (doubly) return ParityClass::doubly_even;
  return even ? ParityClass::even : ParityClass::not_even;
}

bool is_self_orthogonal(const LinearCode& code) {
  const auto basis = code.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (inner_product(basis[i], basis[j])) return false;
    }
  }
  return true;
}

Projection project_onto_support(const LinearCode& code, const BitWord& w) {
  if (!code.contains(w)) throw DomainError("projection word " + w.to_string() + " is not a codeword");
  const auto coords = support(w);
  std::vector<BitWord> rows;
  rows.reserve(code.dimension());
  for (const BitWord& b : code.basis()) rows.push_back(restrict_to(b, coords));
  LinearCode image = code_from_rows(rows, coords.size());
  const std::size_t kernel = code.dimension() - image.dimension();
  return Projection{std::move(image), kernel};
}

}  // namespace nodal
