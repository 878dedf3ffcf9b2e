#include "nodal/formulas.hpp"

#include <algorithm>
#include <array>

#include "nodal/error.hpp"

namespace nodal {
namespace {

constexpr std::array<std::int64_t, 7> kProvenStrict{3, 4, 5, 6, 7, 8, 10};
constexpr std::array<std::int64_t, 4> kProvenWeak{2, 4, 6, 8};

}  // namespace

std::string to_string(const ChiValue& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

bool is_integral(const ChiValue& value) noexcept { return value.denominator() == 1; }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

ChiValue chi(std::int64_t s, std::int64_t v, std::int64_t weight) {
  // Everything over the common denominator 8.
  const std::int64_t numerator = s * v * (v - 2 * s + 8) + 8 * (binomial(s - 1, 3) + 1) - 2 * weight;
  return ChiValue(numerator, 8);
}

std::int64_t serre_dual_twist(std::int64_t s, std::int64_t v) noexcept { return 2 * (s - 4) - v; }

bool gallarati_check(std::int64_t m, std::int64_t n, std::int64_t q, std::int64_t t, std::int64_t sing_s) noexcept {
  return q * (t - sing_s) == m * n * (m - n);
}

std::int64_t contact_count_nodal(std::int64_t s, std::int64_t v, std::int64_t beta) {
  if (v < 1) throw DomainError("contact surface degree must be >= 1");
  if (s <= v) throw DomainError("contact count needs s > v (got s=" + std::to_string(s) + ", v=" + std::to_string(v) + ")");
  if (beta < 0) throw DomainError("beta must be non-negative");
  return s * v * (s - v) / 2 + beta;
}

std::int64_t reduced_contact_lower_bound(std::int64_t s, std::int64_t v) {
  if (v < 1 || s <= 1) throw DomainError("reduced contact bound needs v >= 1 and s > 1");
  const std::int64_t p = s * v * (s - v);
  // ceil(p / 2), correct for negative p as well.
  return p >= 0 ? (p + 1) / 2 : p / 2;
}

std::int64_t plane_contact_weight(std::int64_t s) {
  if (s < 2) throw DomainError("plane contact weight needs s >= 2");
  return s * (s - 1) / 2;
}

std::int64_t quadric_contact_weight(std::int64_t s) {
  if (s < 2) throw DomainError("quadric contact weight needs s >= 2");
  return s % 2 == 0 ? s * (s - 2) : (s - 1) * (s - 1);
}

std::int64_t unstable_lower_bound(std::int64_t s, std::int64_t v) {
  if (s < 2) throw DomainError("unstable bound needs s >= 2");
  const std::int64_t twice = 2 * v;
  if (twice == s) return s * s * s / 8;
  if (twice == s + 1 || twice == s + 2) return s * v * (s - v) / 2;
  throw DomainError("unstable bound is only known for 2v in {s, s+1, s+2} (s=" + std::to_string(s) +
                    ", v=" + std::to_string(v) + ")");
}

ChiValue printed_unstable_bound(std::int64_t s, std::int64_t v) {
  const std::int64_t twice = 2 * v;
  if (twice == s) return ChiValue(s * s * s, 8);
  if (twice == s + 1) return ChiValue(s * (s - 1) * (s - 1), 8);
  if (twice == s + 2) return ChiValue(s * (s - 2) * (s - 2), 8);
  throw DomainError("no printed unstable bound for 2v outside {s, s+1, s+2}");
}

bool is_proven_strict_degree(std::int64_t s) noexcept {
  return std::find(kProvenStrict.begin(), kProvenStrict.end(), s) != kProvenStrict.end();
}

bool is_proven_weak_degree(std::int64_t s) noexcept {
  return std::find(kProvenWeak.begin(), kProvenWeak.end(), s) != kProvenWeak.end();
}

std::int64_t e_min(std::int64_t s) {
  if (!is_proven_strict_degree(s)) {
    throw UnprovenCase("minimal strictly even weight is not established for degree " + std::to_string(s) +
                       "; proven degrees are 3, 4, 5, 6, 7, 8, 10 (the quadric formula is conjectured in general)");
  }
  return quadric_contact_weight(s);
}

std::int64_t e_bar_min(std::int64_t s) {
  if (!is_proven_weak_degree(s)) {
    throw UnprovenCase("minimal weakly even weight is not established for degree " + std::to_string(s) +
                       "; proven degrees are 2, 4, 6, 8 (the plane formula is conjectured in general)");
  }
  return plane_contact_weight(s);
}

std::int64_t smooth_cubic_weight(std::int64_t s) noexcept { return 3 * s * (s - 3) / 2; }

std::int64_t smooth_quartic_weight(std::int64_t s) noexcept { return 2 * s * (s - 4); }

}  // namespace nodal
