#include "nodal/surface.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nodal/error.hpp"
#include "nodal/formulas.hpp"

using nodal::EvenSetParity;
using nodal::NodalSurface;

namespace {

TEST(Surface, MaxNodes) {
  const std::int64_t expected[] = {0, 1, 4, 16, 31, 65};
  for (std::int64_t d = 1; d <= 6; ++d) EXPECT_EQ(nodal::max_nodes(d), expected[d - 1]);
  EXPECT_THROW(nodal::max_nodes(7), nodal::DomainError);
}

TEST(Surface, NodeCountValidation) {
  EXPECT_NO_THROW(NodalSurface::make(6, 65));
  EXPECT_THROW(NodalSurface::make(6, 66), nodal::DomainError);
  EXPECT_THROW(NodalSurface::make(4, -1), nodal::DomainError);
  EXPECT_NO_THROW(NodalSurface::make(9, 200));
}

TEST(Surface, SecondBettiNumber) {
  EXPECT_EQ(nodal::b2_resolution(3), 7);
  EXPECT_EQ(nodal::b2_resolution(4), 22);
  EXPECT_EQ(nodal::b2_resolution(5), 53);
  EXPECT_EQ(nodal::b2_resolution(6), 106);
  EXPECT_THROW(nodal::b2_resolution(1), nodal::DomainError);
}

TEST(Surface, DimensionLowerBounds) {
  EXPECT_EQ(nodal::dim_lower_bound(NodalSurface::make(3, 4), EvenSetParity::strict), 1);
  EXPECT_EQ(nodal::dim_lower_bound(NodalSurface::make(4, 16), EvenSetParity::strict), 5);
  EXPECT_EQ(nodal::dim_lower_bound(NodalSurface::make(5, 31), EvenSetParity::strict), 5);
  EXPECT_EQ(nodal::dim_lower_bound(NodalSurface::make(6, 65), EvenSetParity::strict), 12);
  EXPECT_EQ(nodal::dim_lower_bound(NodalSurface::make(6, 65), EvenSetParity::weak), 13);
  EXPECT_EQ(nodal::dim_lower_bound(NodalSurface::make(4, 1), EvenSetParity::strict), 0);
  EXPECT_THROW(nodal::dim_lower_bound(NodalSurface::make(5, 31), EvenSetParity::weak), nodal::DomainError);
}

TEST(Surface, WeightClasses) {
  EXPECT_EQ(nodal::strict_weight_modulus(6), 8);
  EXPECT_EQ(nodal::strict_weight_modulus(5), 4);
  EXPECT_EQ(nodal::strict_weight_modulus(7), 4);
  EXPECT_EQ(nodal::weak_weight_residue(4), 2);
  EXPECT_EQ(nodal::weak_weight_residue(6), 3);
  EXPECT_EQ(nodal::weak_weight_residue(8), 0);
  EXPECT_THROW(nodal::weak_weight_residue(5), nodal::DomainError);
}

TEST(Surface, Profile) {
  const auto sextic = nodal::code_profile(NodalSurface::make(6, 65));
  EXPECT_EQ(sextic.dim_lower_bound_strict, 12);
  EXPECT_EQ(sextic.strict_modulus, 8);
  ASSERT_TRUE(sextic.weak_residue.has_value());
  EXPECT_EQ(*sextic.weak_residue, 3);
  const auto quintic = nodal::code_profile(NodalSurface::make(5, 31));
  EXPECT_FALSE(quintic.dim_lower_bound_even.has_value());
  EXPECT_FALSE(quintic.weak_residue.has_value());
}

TEST(Surface, CayleyCode) {
  const auto code = nodal::cayley_code();
  EXPECT_EQ(code.dimension(), 1u);
  EXPECT_EQ(nodal::minimum_distance(code), 4u);
}

TEST(Surface, TogliattiRowsAllHaveWeightSixteen) {
  const auto code = nodal::togliatti_code();
  for (const nodal::BitWord& row : code.basis()) EXPECT_EQ(row.weight(), 16u);
}

// Row operations keep columns distinct, so the canonical basis suffices.
std::set<std::uint32_t> columns_of(const nodal::LinearCode& code) {
  std::set<std::uint32_t> columns;
  for (std::size_t j = 0; j < code.length(); ++j) {
    std::uint32_t col = 0;
    for (std::size_t i = 0; i < code.dimension(); ++i) col = (col << 1) | code.basis()[i].test(j);
    columns.insert(col);
  }
  return columns;
}

TEST(Surface, SimplexColumnsAreDistinctAndNonzero) {
  for (const auto& code : {nodal::simplex_code_from_columns(5), nodal::togliatti_code()}) {
    EXPECT_EQ(code.length(), 31u);
    const auto columns = columns_of(code);
    EXPECT_EQ(columns.size(), 31u);
    EXPECT_FALSE(columns.contains(0));
  }
  // Same columns in another order: equal distributions, different subspaces.
  EXPECT_EQ(nodal::weight_distribution(nodal::simplex_code_from_columns(5)).counts,
            nodal::weight_distribution(nodal::togliatti_code()).counts);
}

TEST(SexticCertificate, ConcludesTwelve) {
  const auto cert = nodal::sextic_dim_certificate();
  EXPECT_EQ(cert.value, 12);
  ASSERT_FALSE(cert.steps.empty());
  EXPECT_EQ(cert.steps.front().rule, nodal::Rule::dimension_bound);
  EXPECT_EQ(std::get<std::int64_t>(cert.steps.front().asserted_output), 12);
  const auto griesmer = std::find_if(cert.steps.begin(), cert.steps.end(),
                                     [](const nodal::Step& s) { return s.rule == nodal::Rule::griesmer; });
  ASSERT_NE(griesmer, cert.steps.end());
  EXPECT_EQ(std::get<std::int64_t>(griesmer->asserted_output), 32 + 16 + 8 + 4 + 2 + 1 + 6);
  EXPECT_TRUE(nodal::validate(cert).valid);
}

}  // namespace
