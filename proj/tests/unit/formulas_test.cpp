#include "nodal/formulas.hpp"

#include <gtest/gtest.h>

#include "nodal/error.hpp"
#include "nodal/surface.hpp"

using nodal::ChiValue;

namespace {

// Independent evaluation: s v (v - 2s + 8)/8 + C(s-1,3) + 1 - w/4, term by term.
ChiValue chi_oracle(std::int64_t s, std::int64_t v, std::int64_t w) {
  const std::int64_t m = s - 1;
  const std::int64_t c3 = m >= 3 ? m * (m - 1) * (m - 2) / 6 : 0;
  return ChiValue(s * v * (v - 2 * s + 8), 8) + ChiValue(c3 + 1) - ChiValue(w, 4);
}

TEST(Chi, SpecificValues) {
  EXPECT_EQ(nodal::chi(4, 1, 6), ChiValue(1));
  EXPECT_EQ(nodal::chi(8, 3, 28), ChiValue(14));
  EXPECT_EQ(nodal::chi(10, 6, 80), ChiValue(20));
  EXPECT_EQ(nodal::chi(6, 1, 15), ChiValue(5));
  EXPECT_EQ(nodal::to_string(nodal::chi(4, 1, 7)), "3/4");
  EXPECT_EQ(nodal::to_string(nodal::chi(4, 1, 14)), "-1");
}

struct ClosedForm {
  std::int64_t s, v;
  ChiValue at_zero;  // chi = at_zero - w/4
};

TEST(Chi, ClosedFormsOnSampledWeights) {
  const ClosedForm forms[] = {
      {4, 1, ChiValue(10, 4)}, {6, 1, ChiValue(35, 4)}, {6, 3, ChiValue(35, 4)}, {8, 3, ChiValue(21)},
      {8, 5, ChiValue(21)},    {5, 2, ChiValue(5)},     {6, 2, ChiValue(8)},      {7, 2, ChiValue(14)},
      {7, 4, ChiValue(14)},    {8, 4, ChiValue(20)},    {10, 6, ChiValue(40)},
  };
  for (const ClosedForm& f : forms) {
    for (std::int64_t w : {0, 6, 15, 24, 56, 80, 112}) {
      EXPECT_EQ(nodal::chi(f.s, f.v, w), f.at_zero - ChiValue(w, 4)) << f.s << "," << f.v << "," << w;
    }
  }
}

TEST(Chi, AgreesWithTermwiseOracle) {
  for (std::int64_t s = 2; s <= 14; ++s) {
    for (std::int64_t v = -6; v <= 2 * s + 2; ++v) {
      for (std::int64_t w = 0; w <= 60; w += 3) ASSERT_EQ(nodal::chi(s, v, w), chi_oracle(s, v, w));
    }
  }
}

TEST(Chi, SerreSymmetryExhaustive) {
  for (std::int64_t s = 2; s <= 12; ++s) {
    for (std::int64_t v = -5; v <= 2 * s; ++v) {
      const std::int64_t dual = nodal::serre_dual_twist(s, v);
      for (std::int64_t w = 0; w <= 4 * s * s; w += 4) ASSERT_EQ(nodal::chi(s, v, w), nodal::chi(s, dual, w));
    }
  }
}

TEST(Chi, WeakResidueMatchesIntegrality) {
  for (std::int64_t s : {4, 6, 8, 10}) {
    const std::int64_t r = nodal::weak_weight_residue(s);
    for (std::int64_t w = 0; w <= 200; ++w) {
      EXPECT_EQ(nodal::is_integral(nodal::chi(s, 1, w)), (w - r) % 4 == 0) << "s=" << s << " w=" << w;
    }
  }
}

TEST(SerreDual, Twists) {
  EXPECT_EQ(nodal::serre_dual_twist(8, 5), 3);
  EXPECT_EQ(nodal::serre_dual_twist(6, 1), 3);
  EXPECT_EQ(nodal::serre_dual_twist(10, 6), 6);
}

TEST(Gallarati, Check) {
  EXPECT_TRUE(nodal::gallarati_check(3, 3, 5, 2, 2));
  EXPECT_TRUE(nodal::gallarati_check(4, 2, 2, 10, 2));
  EXPECT_FALSE(nodal::gallarati_check(3, 2, 1, 0, 0));
}

TEST(ContactCounts, NodalAndReduced) {
  EXPECT_EQ(nodal::contact_count_nodal(4, 1, 0), 6);
  EXPECT_EQ(nodal::contact_count_nodal(5, 2, 1), 16);
  EXPECT_EQ(nodal::contact_count_nodal(6, 3, 0), 27);
  EXPECT_THROW(nodal::contact_count_nodal(3, 3, 0), nodal::DomainError);
  EXPECT_EQ(nodal::reduced_contact_lower_bound(8, 5), 60);
  EXPECT_EQ(nodal::reduced_contact_lower_bound(7, 4), 42);
  EXPECT_EQ(nodal::reduced_contact_lower_bound(10, 6), 120);
}

TEST(ContactCounts, PlaneAndQuadric) {
  EXPECT_EQ(nodal::plane_contact_weight(4), 6);
  EXPECT_EQ(nodal::plane_contact_weight(6), 15);
  EXPECT_EQ(nodal::plane_contact_weight(8), 28);
  EXPECT_EQ(nodal::quadric_contact_weight(6), 24);
  EXPECT_EQ(nodal::quadric_contact_weight(5), 16);
  EXPECT_EQ(nodal::quadric_contact_weight(7), 36);
}

TEST(Unstable, Bounds) {
  EXPECT_EQ(nodal::unstable_lower_bound(6, 3), 27);
  EXPECT_EQ(nodal::unstable_lower_bound(7, 4), 42);
  EXPECT_EQ(nodal::unstable_lower_bound(8, 5), 60);
  EXPECT_EQ(nodal::unstable_lower_bound(10, 6), 120);
  EXPECT_THROW(nodal::unstable_lower_bound(8, 2), nodal::DomainError);
  EXPECT_THROW(nodal::unstable_lower_bound(8, 6), nodal::DomainError);
  for (std::int64_t s = 2; s <= 20; s += 2) {
    EXPECT_EQ(nodal::unstable_lower_bound(s, s / 2), s * s * s / 8);
    EXPECT_EQ(nodal::contact_count_nodal(s, s / 2, 0), s * s * s / 8);
  }
}

TEST(Unstable, PrintedFormsDifferFromUsedBounds) {
  EXPECT_NE(nodal::printed_unstable_bound(7, 4), ChiValue(42));
  EXPECT_NE(nodal::printed_unstable_bound(8, 5), ChiValue(60));
  EXPECT_EQ(nodal::printed_unstable_bound(6, 3), ChiValue(27));
}

TEST(MinimalWeights, ProvenDegrees) {
  EXPECT_EQ(nodal::e_min(6), 24);
  EXPECT_EQ(nodal::e_min(7), 36);
  EXPECT_EQ(nodal::e_min(10), 80);
  EXPECT_EQ(nodal::e_bar_min(2), 1);
  EXPECT_EQ(nodal::e_bar_min(4), 6);
  EXPECT_EQ(nodal::e_bar_min(8), 28);
  for (std::int64_t s : {3, 4, 5, 6, 7, 8, 10}) EXPECT_EQ(nodal::e_min(s), nodal::quadric_contact_weight(s));
  for (std::int64_t s : {2, 4, 6, 8}) EXPECT_EQ(nodal::e_bar_min(s), nodal::plane_contact_weight(s));
}

TEST(MinimalWeights, UnprovenDegreesAreRefused) {
  for (std::int64_t s : {2, 9, 11, 12}) EXPECT_THROW(nodal::e_min(s), nodal::UnprovenCase) << s;
  for (std::int64_t s : {3, 5, 10}) EXPECT_THROW(nodal::e_bar_min(s), nodal::UnprovenCase) << s;
  try {
    nodal::e_min(9);
  } catch (const nodal::UnprovenCase& e) {
    EXPECT_NE(std::string(e.what()).find("9"), std::string::npos);
  }
}

TEST(SmoothEndpoints, Values) {
  EXPECT_EQ(nodal::smooth_cubic_weight(8), 60);
  EXPECT_EQ(nodal::smooth_quartic_weight(10), 120);
  EXPECT_EQ(nodal::smooth_quartic_weight(6), nodal::e_min(6));
}

}  // namespace
