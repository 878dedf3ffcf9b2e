#include "nodal/griesmer.hpp"

#include <string>

#include "nodal/error.hpp"

namespace nodal {

std::uint64_t griesmer_min_length(std::uint64_t k, std::uint64_t d) {
  if (k < 1 || d < 1) throw DomainError("griesmer bound needs k >= 1 and d >= 1");
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    // ceil(d / 2^i); once 2^i >= d every further term is 1.
    n += i < 63 ? (d + (std::uint64_t{1} << i) - 1) >> i : 1;
  }
  return n;
}

std::uint64_t griesmer_max_dim(std::uint64_t n, std::uint64_t d) {
  if (d < 1) throw DomainError("griesmer bound needs d >= 1");
  if (d > n) throw DomainError("no code with d = " + std::to_string(d) + " > n = " + std::to_string(n));
  // Each extra dimension adds at least 1 to the length, so k <= n.
  std::uint64_t k = 1;
  while (k < n && griesmer_min_length(k + 1, d) <= n) ++k;
  return k;
}

}  // namespace nodal
