#pragma once

#include <cstdint>

namespace nodal {

/// Smallest length n admitted by the Griesmer bound for an [n,k,d] binary
/// code: sum_{i<k} ceil(d / 2^i). Requires k >= 1 and d >= 1.
std::uint64_t griesmer_min_length(std::uint64_t k, std::uint64_t d);

/// Largest k with griesmer_min_length(k, d) <= n. Requires 1 <= d <= n.
std::uint64_t griesmer_max_dim(std::uint64_t n, std::uint64_t d);

}  // namespace nodal
