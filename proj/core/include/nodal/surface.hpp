#pragma once

#include <cstdint>
#include <optional>

#include "nodal/certificate.hpp"
#include "nodal/linear_code.hpp"

namespace nodal {

/// Degree s and node count mu of a nodal surface in P^3.
struct NodalSurface {
  std::int64_t degree = 0;
  std::int64_t node_count = 0;

  /// Checks s >= 1, mu >= 0 and, for s <= 6, mu <= max_nodes(s).
  static NodalSurface make(std::int64_t degree, std::int64_t node_count);
};

/// Maximal number of nodes for degree 1..6: 0, 1, 4, 16, 31, 65. Throws
/// DomainError outside [1, 6].
std::int64_t max_nodes(std::int64_t degree);

/// Second Betti number of the resolved surface, s^3 - 4s^2 + 6s - 2.
std::int64_t b2_resolution(std::int64_t s);

/// Lower bound on dim C_S (strict) or on dim of the full even-set code
/// (weak): max(0, ceil(mu - b2/2)) plus one in the weak case. Weak parity
/// needs even degree.
std::int64_t dim_lower_bound(const NodalSurface& surface, EvenSetParity parity);

/// Every strictly even weight is divisible by this: 8 for even s, 4 for odd.
std::int64_t strict_weight_modulus(std::int64_t s) noexcept;

/// Residue r in [0, 3] with chi(s, 1, w) integral exactly when w ≡ r mod 4.
/// Derived from the chi formula. Needs even s.
std::int64_t weak_weight_residue(std::int64_t s);

struct SurfaceCodeProfile {
  std::int64_t dim_lower_bound_strict = 0;
  std::optional<std::int64_t> dim_lower_bound_even;
  std::int64_t strict_modulus = 4;
  std::optional<std::int64_t> weak_residue;
};

SurfaceCodeProfile code_profile(const NodalSurface& surface);

/// [4,1,4] code spanned by 1111 (cubic with four nodes).
LinearCode cayley_code();

/// [16,5,8] code of a Kummer quartic, from its five generator rows.
LinearCode kummer_code();

/// [31,5,16] code of a Togliatti quintic, from its five generator rows.
LinearCode togliatti_code();

/// [31,5,16] simplex code built independently: column j (0-based) is the
/// binary expansion of j+1. Permutation-equivalent to togliatti_code().
LinearCode simplex_code_from_columns(std::size_t rows);

/// Checked derivation that a 65-nodal sextic without weight-56 words has
/// dim C_S = 12.
ProofCertificate sextic_dim_certificate();

}  // namespace nodal
