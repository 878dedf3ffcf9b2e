#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace nodal {

/// Exact value of the Riemann-Roch characteristic; the denominator always
/// divides 8.
using ChiValue = boost::rational<std::int64_t>;

/// "p/q", or "p" when the value is integral.
std::string to_string(const ChiValue& value);

bool is_integral(const ChiValue& value) noexcept;

/// C(n, k), defined as 0 for n < k.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// chi of the bundle of twist v minus half the exceptional curves of a word
/// of the given weight, on the resolution of a nodal surface of degree s:
///
///   s*v*(v - 2s + 8)/8 + C(s-1, 3) + 1 - weight/4
///
/// Any integer twist is allowed.
ChiValue chi(std::int64_t s, std::int64_t v, std::int64_t weight);

/// Twist v' = 2(s-4) - v paired with v by Serre duality; chi(s,v,w) = chi(s,v',w).
std::int64_t serre_dual_twist(std::int64_t s, std::int64_t v) noexcept;

/// q*(t - sing_s) == m*n*(m - n) for two hypersurfaces of degrees m, n in
/// contact with multiplicity q.
bool gallarati_check(std::int64_t m, std::int64_t n, std::int64_t q, std::int64_t t, std::int64_t sing_s) noexcept;

/// Nodes cut out by an irreducible contact surface of degree v < s with beta
/// extra singular points: s*v*(s-v)/2 + beta (exact when V is nodal).
std::int64_t contact_count_nodal(std::int64_t s, std::int64_t v, std::int64_t beta);

/// Lower bound ceil(s*v*(s-v)/2) on the weight cut out by a reduced contact
/// surface of total degree v.
std::int64_t reduced_contact_lower_bound(std::int64_t s, std::int64_t v);

/// Weight of an even set cut out by a plane: s(s-1)/2.
std::int64_t plane_contact_weight(std::int64_t s);

/// Weight of an even set cut out by a reduced quadric: s(s-2) for even s,
/// (s-1)^2 for odd s.
std::int64_t quadric_contact_weight(std::int64_t s);

/// Weight bound for a word that is unstable in degree v, for 2v in
/// {s, s+1, s+2}. At v = s/2 the weight is exactly s^3/8; otherwise the
/// bound is s*v*(s-v)/2.
std::int64_t unstable_lower_bound(std::int64_t s, std::int64_t v);

/// The squared closed forms s(s-1)^2/8 (2v = s+1) and s(s-2)^2/8
/// (2v = s+2). These are not used as bounds; certificates record them next
/// to unstable_lower_bound when the two disagree.
ChiValue printed_unstable_bound(std::int64_t s, std::int64_t v);

/// Minimal weight of a nonzero strictly even set, s in {3,4,5,6,7,8,10}.
/// Throws UnprovenCase elsewhere.
std::int64_t e_min(std::int64_t s);

/// Minimal weight of a nonzero even set, s in {2,4,6,8}. Throws UnprovenCase
/// elsewhere.
std::int64_t e_bar_min(std::int64_t s);

bool is_proven_strict_degree(std::int64_t s) noexcept;
bool is_proven_weak_degree(std::int64_t s) noexcept;

/// 3s(s-3)/2, the weight cut out by a smooth cubic.
std::int64_t smooth_cubic_weight(std::int64_t s) noexcept;

/// 2s(s-4), the weight cut out by a smooth quartic.
std::int64_t smooth_quartic_weight(std::int64_t s) noexcept;

}  // namespace nodal
