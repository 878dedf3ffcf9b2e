#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodal/certificate.hpp"

namespace nodal {

/// The eleven (degree, parity) pairs for which the minimal weight is proven,
/// in report order: strict 3, 4, 5, 6, 7, 8, 10, then weak 2, 4, 6, 8.
std::vector<std::pair<std::int64_t, EvenSetParity>> proven_cases();

/// Rebuilds the minimal-weight argument for one degree and parity:
/// the admissible weight lattice, chi and h0 bounds for every admissible
/// weight below the instability threshold (or up to the minimum when there
/// is none), the plane/quadric conclusion, and the closed-form gap list.
/// Geometric inputs enter as hypothesis steps. Throws UnprovenCase outside
/// proven_cases().
ProofCertificate derive_gaps(std::int64_t s, EvenSetParity parity);

/// derive_gaps for every proven case, in proven_cases() order. With
/// threads != 1 the cases are derived concurrently; output is identical.
std::vector<ProofCertificate> derive_all_gaps(unsigned threads = 1);

/// Expands a table cell such as "32,36,...,56" (also accepts "\ldots").
/// An empty cell gives an empty list.
WeightList expand_progression(std::string_view cell);

/// Inverse display form: lists of four or more terms with a common step
/// become "a,b,...,z".
std::string compact_progression(const WeightList& weights);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string title;
  std::vector<CheckLine> lines;

  bool passed() const;
};

/// derive_gaps(s, parity).value against e_min / e_bar_min for every proven
/// case; a line also fails if its certificate does not validate.
VerificationReport verify_theorem_main();

/// Excluded weights per case against the published gap table.
VerificationReport verify_corollary_gaps();

/// Consistency of the list of known strictly even weights per degree:
/// divisibility, no weight inside a derived gap, smallest weight = e_min.
VerificationReport verify_concluding_table();

/// chi(4, v, w) = h0 - h1 + h2 for the tabulated quartic cohomology.
VerificationReport verify_example_cohomology_tables();

}  // namespace nodal
