// Randomized laws of binary linear codes, checked against brute force.

#include <gtest/gtest.h>

#include <random>

#include "nodal/linear_code.hpp"
#include "nodal/surface.hpp"
#include "oracles.hpp"

using nodal::BitWord;
using nodal::LinearCode;

namespace {

struct Sample {
  LinearCode code;
  std::vector<std::uint32_t> rows;
  std::size_t n;
};

std::vector<Sample> random_codes(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t rows = rng() % 11;
    std::vector<BitWord> words;
    std::vector<std::uint32_t> masks;
    for (std::size_t r = 0; r < rows; ++r) {
      BitWord w(n);
      std::uint32_t m = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() & 1) {
          w.set(j);
          m |= std::uint32_t{1} << j;
        }
      }
      words.push_back(w);
      masks.push_back(m);
    }
    out.push_back(Sample{nodal::code_from_rows(words, n), masks, n});
  }
  return out;
}

TEST(CodeProperty, DimensionMatchesSpanOracle) {
  for (const Sample& s : random_codes(1000, 24, 1)) {
    ASSERT_EQ(std::size_t{1} << s.code.dimension(), oracle::span(s.rows).size());
    ASSERT_LE(s.code.dimension(), 10u);
  }
}

TEST(CodeProperty, DualDimensionAndDoubleDual) {
  for (const Sample& s : random_codes(1000, 24, 2)) {
    const LinearCode dual = nodal::dual_code(s.code);
    ASSERT_EQ(dual.dimension() + s.code.dimension(), s.n);
    ASSERT_EQ(nodal::dual_code(dual), s.code);
  }
}

TEST(CodeProperty, DualMatchesBruteForce) {
  for (const Sample& s : random_codes(300, 12, 3)) {
    ASSERT_EQ(oracle::codewords(nodal::dual_code(s.code)), oracle::dual(s.rows, s.n));
  }
}

TEST(CodeProperty, DistributionMatchesBruteForce) {
  for (const Sample& s : random_codes(300, 24, 4)) {
    ASSERT_EQ(nodal::weight_distribution(s.code).counts, oracle::distribution(oracle::span(s.rows)));
  }
}

TEST(CodeProperty, DoublyEvenImpliesSelfOrthogonal) {
  std::size_t doubly_even = 0;
  for (const Sample& s : random_codes(1000, 24, 5)) {
    if (nodal::classify_parity(s.code) == nodal::ParityClass::doubly_even) {
      ++doubly_even;
      ASSERT_TRUE(nodal::is_self_orthogonal(s.code));
    }
  }
  // Random rows rarely give doubly even codes; the example and simplex
  // families make sure the implication is exercised.
  for (const LinearCode& code : {nodal::kummer_code(), nodal::togliatti_code(), nodal::simplex_code_from_columns(3),
                                 nodal::simplex_code_from_columns(6)}) {
    ASSERT_EQ(nodal::classify_parity(code), nodal::ParityClass::doubly_even);
    ASSERT_TRUE(nodal::is_self_orthogonal(code));
    ++doubly_even;
  }
  EXPECT_GT(doubly_even, 4u);
}

// A code whose weights are all divisible by 2d projects onto the support
// of any codeword as a code whose weights are divisible by d.
TEST(CodeProperty, KummerProjectionsAreDoublyEven) {
  const LinearCode code = nodal::kummer_code();
  std::size_t seen = 0;
  for (const BitWord& w : nodal::enumerate_codewords(code)) {
    if (w.weight() != 8) continue;
    ++seen;
    const auto p = nodal::project_onto_support(code, w);
    ASSERT_EQ(p.image.length(), 8u);
    for (const auto& [weight, count] : nodal::weight_distribution(p.image).counts) {
      ASSERT_EQ(weight % 4, 0u) << w.to_string();
    }
    ASSERT_EQ(nodal::classify_parity(p.image), nodal::ParityClass::doubly_even);
    ASSERT_EQ(p.image.dimension() + p.kernel_dimension, code.dimension());
  }
  EXPECT_EQ(seen, 30u);
}

}  // namespace
