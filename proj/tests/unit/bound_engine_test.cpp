#include "nodal/bound_engine.hpp"

#include <gtest/gtest.h>

#include "nodal/error.hpp"
#include "nodal/formulas.hpp"
#include "nodal/surface.hpp"

using nodal::EvenSetParity;
using nodal::WeightList;

namespace {

// Weights w with min < w < end in the admissible class, computed directly.
WeightList open_interval(std::int64_t min, std::int64_t end, std::int64_t modulus, std::int64_t residue) {
  WeightList out;
  for (std::int64_t w = min + 1; w < end; ++w) {
    if (((w - residue) % modulus + modulus) % modulus == 0) out.push_back(w);
  }
  return out;
}

TEST(DeriveGaps, PublishedExamples) {
  const auto weak6 = nodal::derive_gaps(6, EvenSetParity::weak);
  EXPECT_EQ(weak6.value, 15);
  EXPECT_EQ(weak6.gaps->excluded_weights, (WeightList{19, 23}));
  const auto strict8 = nodal::derive_gaps(8, EvenSetParity::strict);
  EXPECT_EQ(strict8.value, 48);
  EXPECT_EQ(strict8.gaps->excluded_weights, (WeightList{56}));
  const auto strict10 = nodal::derive_gaps(10, EvenSetParity::strict);
  EXPECT_EQ(strict10.value, 80);
  EXPECT_EQ(strict10.gaps->excluded_weights, (WeightList{88, 96, 104, 112}));
}

TEST(DeriveGaps, AllProvenCasesValidate) {
  const auto cases = nodal::proven_cases();
  EXPECT_EQ(cases.size(), 11u);
  for (const auto& [s, parity] : cases) {
    const auto cert = nodal::derive_gaps(s, parity);
    const auto verdict = nodal::validate(cert);
    EXPECT_TRUE(verdict.valid) << s << " " << nodal::to_string(parity);
    EXPECT_TRUE(verdict.failed_steps.empty());
    EXPECT_GT(verdict.verified, 0u);
  }
}

TEST(DeriveGaps, MinimaMatchClosedForms) {
  for (std::int64_t s : {3, 4, 5, 6, 7, 8, 10}) {
    EXPECT_EQ(nodal::derive_gaps(s, EvenSetParity::strict).value, nodal::e_min(s));
  }
  for (std::int64_t s : {2, 4, 6, 8}) {
    EXPECT_EQ(nodal::derive_gaps(s, EvenSetParity::weak).value, nodal::e_bar_min(s));
  }
}

TEST(DeriveGaps, ExcludedWeightsFillOpenIntervals) {
  for (std::int64_t s : {6, 7, 8, 10}) {
    const auto cert = nodal::derive_gaps(s, EvenSetParity::strict);
    EXPECT_EQ(cert.gaps->excluded_weights,
              open_interval(nodal::e_min(s), 2 * s * (s - 4), nodal::strict_weight_modulus(s), 0))
        << s;
  }
  for (std::int64_t s : {6, 8}) {
    const auto cert = nodal::derive_gaps(s, EvenSetParity::weak);
    EXPECT_EQ(cert.gaps->excluded_weights,
              open_interval(nodal::e_bar_min(s), 3 * s * (s - 3) / 2, 4, nodal::weak_weight_residue(s)))
        << s;
  }
}

TEST(DeriveGaps, DeviationNotesAreRecorded) {
  const auto has_note = [](const nodal::ProofCertificate& cert, std::string_view key) {
    return std::any_of(cert.steps.begin(), cert.steps.end(), [&](const nodal::Step& s) {
      return s.rule == nodal::Rule::deviation_note && s.input(key) != nullptr;
    });
  };
  EXPECT_TRUE(has_note(nodal::derive_gaps(7, EvenSetParity::strict), "stated_threshold"));
  EXPECT_TRUE(has_note(nodal::derive_gaps(7, EvenSetParity::strict), "printed_bound"));
  EXPECT_TRUE(has_note(nodal::derive_gaps(4, EvenSetParity::strict), "stated_weight"));
  EXPECT_FALSE(has_note(nodal::derive_gaps(6, EvenSetParity::strict), "printed_bound"));
}

TEST(DeriveGaps, UnprovenCasesAreRefused) {
  EXPECT_THROW(nodal::derive_gaps(9, EvenSetParity::strict), nodal::UnprovenCase);
  EXPECT_THROW(nodal::derive_gaps(10, EvenSetParity::weak), nodal::UnprovenCase);
  EXPECT_THROW(nodal::derive_gaps(5, EvenSetParity::weak), nodal::DomainError);
}

TEST(DeriveGaps, DeterministicAcrossRunsAndThreads) {
  const auto serial = nodal::derive_all_gaps(1);
  const auto parallel = nodal::derive_all_gaps(4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(nodal::to_json(serial[i]).dump(), nodal::to_json(parallel[i]).dump());
    EXPECT_EQ(nodal::to_json(serial[i]).dump(),
              nodal::to_json(nodal::derive_gaps(serial[i].degree, serial[i].parity)).dump());
  }
}

TEST(Progressions, ExpandAndCompact) {
  EXPECT_EQ(nodal::expand_progression("32,36,\\ldots,56"), (WeightList{32, 36, 40, 44, 48, 52, 56}));
  EXPECT_EQ(nodal::expand_progression("48,64,72,80,...,128"),
            (WeightList{48, 64, 72, 80, 88, 96, 104, 112, 120, 128}));
  EXPECT_EQ(nodal::expand_progression(""), WeightList{});
  EXPECT_EQ(nodal::expand_progression("19, 23"), (WeightList{19, 23}));
  EXPECT_EQ(nodal::compact_progression({88, 96, 104, 112}), "88,96,...,112");
  EXPECT_EQ(nodal::compact_progression({19, 23}), "19,23");
  EXPECT_EQ(nodal::compact_progression({}), "");
}

TEST(Reports, AllVerificationsPass) {
  for (const auto& report : {nodal::verify_theorem_main(), nodal::verify_corollary_gaps(),
                             nodal::verify_concluding_table(), nodal::verify_example_cohomology_tables()}) {
    EXPECT_TRUE(report.passed()) << report.title;
    for (const auto& line : report.lines) EXPECT_TRUE(line.pass) << report.title << ": " << line.name;
  }
  EXPECT_EQ(nodal::verify_theorem_main().lines.size(), 11u);
  EXPECT_EQ(nodal::verify_corollary_gaps().lines.size(), 6u);
  EXPECT_EQ(nodal::verify_example_cohomology_tables().lines.size(), 8u);
}

}  // namespace
