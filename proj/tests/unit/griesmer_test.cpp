#include "nodal/griesmer.hpp"

#include <gtest/gtest.h>

#include "nodal/error.hpp"
#include "oracles.hpp"

namespace {

TEST(Griesmer, MinLength) {
  EXPECT_EQ(nodal::griesmer_min_length(5, 16), 31u);
  EXPECT_EQ(nodal::griesmer_min_length(5, 8), 16u);
  EXPECT_EQ(nodal::griesmer_min_length(1, 7), 7u);
  EXPECT_EQ(nodal::griesmer_min_length(12, 32), 69u);
}

TEST(Griesmer, MaxDimension) {
  EXPECT_EQ(nodal::griesmer_max_dim(16, 8), 5u);
  EXPECT_EQ(nodal::griesmer_max_dim(31, 16), 5u);
  // d=32: lengths 63, 64, 65, 66 for k = 6..9.
  EXPECT_EQ(nodal::griesmer_max_dim(65, 32), 8u);
  EXPECT_EQ(oracle::griesmer_sum(8, 32), 65u);
  EXPECT_EQ(oracle::griesmer_sum(9, 32), 66u);
}

TEST(Griesmer, AgreesWithSummationOracle) {
  for (std::uint64_t d = 1; d <= 70; ++d) {
    for (std::uint64_t k = 1; k <= 20; ++k) {
      ASSERT_EQ(nodal::griesmer_min_length(k, d), oracle::griesmer_sum(k, d));
    }
    for (std::uint64_t n = d; n <= 100; ++n) {
      std::uint64_t k = 0;
      while (oracle::griesmer_sum(k + 1, d) <= n) ++k;
      ASSERT_EQ(nodal::griesmer_max_dim(n, d), k) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Griesmer, Errors) {
  EXPECT_THROW(nodal::griesmer_max_dim(16, 17), nodal::DomainError);
  EXPECT_THROW(nodal::griesmer_max_dim(16, 0), nodal::DomainError);
  EXPECT_THROW(nodal::griesmer_min_length(0, 4), nodal::DomainError);
  EXPECT_THROW(nodal::griesmer_min_length(3, 0), nodal::DomainError);
}

}  // namespace
