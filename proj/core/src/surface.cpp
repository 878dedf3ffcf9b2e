#include "nodal/surface.hpp"

#include <array>
#include <string>

#include "nodal/error.hpp"
#include "nodal/formulas.hpp"
#include "nodal/griesmer.hpp"

namespace nodal {
namespace {

constexpr std::array<std::int64_t, 6> kMaxNodes{0, 1, 4, 16, 31, 65};

// ceil(a / 2) for any sign.
std::int64_t ceil_half(std::int64_t a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

Step make_step(Rule rule, std::vector<std::pair<std::string, Value>> inputs, Value output, std::string quote) {
  return Step{rule, std::move(inputs), std::move(output), std::move(quote)};
}

}  // namespace

NodalSurface NodalSurface::make(std::int64_t degree, std::int64_t node_count) {
  if (degree < 1) throw DomainError("surface degree must be >= 1");
  if (node_count < 0) throw DomainError("node count must be >= 0");
  if (degree <= 6 && node_count > max_nodes(degree)) {
    throw DomainError("a nodal surface of degree " + std::to_string(degree) + " has at most " +
                      std::to_string(max_nodes(degree)) + " nodes");
  }
  return NodalSurface{degree, node_count};
}

std::int64_t max_nodes(std::int64_t degree) {
  if (degree < 1 || degree > 6) {
    throw DomainError("maximal node count is only tabulated for degrees 1..6 (got " + std::to_string(degree) + ")");
  }
  return kMaxNodes[static_cast<std::size_t>(degree - 1)];
}

std::int64_t b2_resolution(std::int64_t s) {
  if (s < 2) throw DomainError("b2 of the resolution needs s >= 2");
  return s * s * s - 4 * s * s + 6 * s - 2;
}

std::int64_t dim_lower_bound(const NodalSurface& surface, EvenSetParity parity) {
  const std::int64_t b2 = b2_resolution(surface.degree);
  if (parity == EvenSetParity::weak) {
    if (surface.degree % 2 != 0) throw DomainError("weakly even sets only exist on surfaces of even degree");
    return std::max<std::int64_t>(0, ceil_half(2 * surface.node_count + 2 - b2));
  }
  return std::max<std::int64_t>(0, ceil_half(2 * surface.node_count - b2));
}

std::int64_t strict_weight_modulus(std::int64_t s) noexcept { return s % 2 == 0 ? 8 : 4; }

std::int64_t weak_weight_residue(std::int64_t s) {
  if (s % 2 != 0) throw DomainError("weak weight residue needs even degree (got " + std::to_string(s) + ")");
  std::optional<std::int64_t> residue;
  for (std::int64_t r = 0; r < 4; ++r) {
    if (!is_integral(chi(s, 1, r))) continue;
    if (residue) throw Error("chi(s, 1, w) is integral for two residues mod 4");
    residue = r;
  }
  if (!residue) throw Error("chi(s, 1, w) is never integral");
  return *residue;
}

SurfaceCodeProfile code_profile(const NodalSurface& surface) {
  SurfaceCodeProfile p;
  p.dim_lower_bound_strict = dim_lower_bound(surface, EvenSetParity::strict);
  p.strict_modulus = strict_weight_modulus(surface.degree);
  if (surface.degree % 2 == 0) {
    p.dim_lower_bound_even = dim_lower_bound(surface, EvenSetParity::weak);
    p.weak_residue = weak_weight_residue(surface.degree);
  }
  return p;
}

LinearCode cayley_code() { return code_from_strings({"1111"}); }

LinearCode kummer_code() {
  return code_from_strings({
      "1111111100000000",
      "1111000011110000",
      "1100110011001100",
      "1010101010101010",
      "1111111111111111",
  });
}

LinearCode togliatti_code() {
  return code_from_strings({
      "1111111111111111000000000000000",
      "1111111100000000111111110000000",
      "1111000011110000111100001111000",
      "1100110011001100110011001100110",
      "1010101010101010101010101010101",
  });
}

LinearCode simplex_code_from_columns(std::size_t rows) {
  if (rows < 1 || rows > 20) throw DomainError("simplex code needs 1..20 rows");
  const std::size_t n = (std::size_t{1} << rows) - 1;
  std::vector<BitWord> generator(rows, BitWord(n));
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t column = j + 1;
    for (std::size_t i = 0; i < rows; ++i) {
      if ((column >> i) & 1U) generator[i].set(j);
    }
  }
  return code_from_rows(generator);
}

ProofCertificate sextic_dim_certificate() {
  constexpr std::int64_t kDegree = 6;
  const std::int64_t nodes = max_nodes(kDegree);
  const std::int64_t b2 = b2_resolution(kDegree);
  const std::int64_t lower = dim_lower_bound(NodalSurface::make(kDegree, nodes), EvenSetParity::strict);
  const WeightList admissible{24, 32, 40, 56};
  const WeightList without_56{24, 32, 40};
  const std::int64_t min_weight = 24;
  const std::int64_t next_weight = 32;
  const auto griesmer_length = static_cast<std::int64_t>(griesmer_min_length(
      static_cast<std::uint64_t>(lower), static_cast<std::uint64_t>(next_weight)));
  const std::int64_t image_modulus = strict_weight_modulus(kDegree) / 2;
  const std::int64_t upper = min_weight / 2;

  ProofCertificate cert;
  cert.topic = "code-dimension";
  cert.degree = kDegree;
  cert.parity = EvenSetParity::strict;
  auto& steps = cert.steps;
  steps.push_back(make_step(Rule::dimension_bound, {{"degree", kDegree}, {"nodes", nodes}, {"b2", b2}}, lower,
                            "dim C_S >= mu - b2/2: the classes of strictly even sets span an isotropic subspace "
                            "of H^2(S~, F_2)"));
  steps.push_back(make_step(Rule::hypothesis, {{"weights", admissible}}, true,
                            "every nonzero word of C_S on a 65-nodal sextic has weight 24, 32, 40 or 56"));
  steps.push_back(make_step(Rule::divisibility,
                            {{"degree", kDegree}, {"weak", std::int64_t{0}}, {"modulus", std::int64_t{8}},
                             {"residue", std::int64_t{0}}},
                            true, "strictly even weights on a surface of even degree are divisible by 8"));
  steps.push_back(make_step(Rule::hypothesis, {{"excluded_weight", std::int64_t{56}}}, true,
                            "assumption: C_S contains no word of weight 56"));
  steps.push_back(make_step(Rule::griesmer, {{"k", lower}, {"d", next_weight}}, griesmer_length,
                            "a [n, k, d] binary code has n >= sum_{i<k} ceil(d/2^i)"));
  steps.push_back(make_step(Rule::inequality, {{"lhs", griesmer_length}, {"rhs", nodes}}, true,
                            "a code of dimension >= 12 and minimum distance >= 32 does not fit in length 65, "
                            "so C_S has a word w of weight 24"));
  steps.push_back(make_step(Rule::trivial_kernel,
                            {{"length", nodes}, {"word_weight", min_weight}, {"admissible", without_56}}, true,
                            "a nonzero v disjoint from w would give |v + w| = |v| + 24, which is not an "
                            "admissible weight; the projection onto supp(w) is injective"));
  steps.push_back(make_step(Rule::projection_divisibility, {{"modulus", strict_weight_modulus(kDegree)}},
                            image_modulus,
                            "|v + w| + 2|v ∩ w| = |v| + |w|: if 2d divides all weights then d divides all "
                            "projected weights, so (C_S)_w is doubly even"));
  steps.push_back(make_step(Rule::self_orthogonal_bound, {{"length", min_weight}, {"modulus", image_modulus}},
                            upper, "a doubly even code is self-orthogonal, so 2k <= n = 24"));
  steps.push_back(make_step(Rule::dimension_squeeze, {{"lower", lower}, {"upper", upper}}, lower,
                            "12 <= dim C_S <= 12"));
  cert.value = lower;
  return cert;
}

}  // namespace nodal
