#pragma once

#include <filesystem>
#include <vector>

#include "nodal/bound_engine.hpp"
#include "nodal/linear_code.hpp"

namespace nodal::cli {

/// Inputs of the full verification run. Tests swap in corrupted codes to
/// confirm the corresponding checks fail.
struct ReproductionFixtures {
  LinearCode kummer;
  LinearCode togliatti;
  /// Directory holding kummer.txt and togliatti.txt.
  std::filesystem::path data_dir;
  unsigned threads = 1;
};

ReproductionFixtures default_fixtures(const std::filesystem::path& data_dir);

/// Every reproducible value: example codes, Griesmer values, Betti numbers,
/// dimension bounds, chi closed forms, contact weights, certificates and the
/// minimal weight, gap table, known weight and cohomology verifications. One line per check, fixed order.
std::vector<CheckLine> run_reproduction_checks(const ReproductionFixtures& fixtures);

}  // namespace nodal::cli
