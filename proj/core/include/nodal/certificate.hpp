#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nodal/formulas.hpp"

namespace nodal {

enum class EvenSetParity { strict, weak };

std::string_view to_string(EvenSetParity parity) noexcept;
/// Accepts "strict" or "weak"; throws DomainError otherwise.
EvenSetParity parse_parity(std::string_view text);

/// What a certificate step claims and how it is re-checked.
enum class Rule {
  divisibility,            // weight lattice {w : w ≡ residue mod modulus} for (degree, parity)
  chi_eval,                // chi(degree, twist, weight)
  serre_dual,              // dual twist 2(s-4) - v
  h0_lower_bound,          // chi - h2_bound, or ceil(chi/2) at a self-dual twist
  instability_exclusion,   // weight < unstable_lower_bound(degree, twist)
  plane_conclusion,        // plane_contact_weight(degree)
  quadric_conclusion,      // quadric_contact_weight(degree)
  hypothesis,              // cited geometric fact, not re-checked
  deviation_note,          // stated value differs from the checked one
  dimension_bound,         // ceil(nodes - b2/2)
  griesmer,                // griesmer_min_length(k, d)
  inequality,              // lhs > rhs
  trivial_kernel,          // no disjoint admissible pair sums to an admissible weight
  projection_divisibility, // 2d | all weights  =>  d | projected weights
  self_orthogonal_bound,   // doubly-even code of length n has k <= n/2
  dimension_squeeze,       // lower == upper
  gap_closure,             // admissible weights strictly between min and endpoint
};

std::string_view to_string(Rule rule) noexcept;
Rule parse_rule(std::string_view text);

using WeightList = std::vector<std::int64_t>;
using Value = std::variant<bool, std::int64_t, ChiValue, WeightList>;

std::string to_string(const Value& value);

struct Step {
  Rule rule = Rule::hypothesis;
  /// Named arguments in a fixed order.
  std::vector<std::pair<std::string, Value>> inputs;
  Value asserted_output = false;
  /// Statement of the fact the step stands for.
  std::string quote;

  const Value* input(std::string_view name) const;
  std::int64_t int_input(std::string_view name) const;

  friend bool operator==(const Step&, const Step&) = default;
};

struct GapReport {
  std::int64_t degree = 0;
  EvenSetParity parity = EvenSetParity::strict;
  std::int64_t min_weight = 0;
  WeightList excluded_weights;
  std::int64_t upper_endpoint = 0;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// Ordered derivation for one (degree, parity). `gaps` is present for
/// minimal-weight certificates; `value` is the concluded number (minimal
/// weight, or the code dimension for dimension certificates).
struct ProofCertificate {
  std::string topic;
  std::int64_t degree = 0;
  EvenSetParity parity = EvenSetParity::strict;
  std::vector<Step> steps;
  std::int64_t value = 0;
  std::optional<GapReport> gaps;

  friend bool operator==(const ProofCertificate&, const ProofCertificate&) = default;
};

enum class StepVerdict { verified, failed, cited };

std::string_view to_string(StepVerdict verdict) noexcept;

/// Recomputes the step from its inputs. Hypothesis steps come back as cited.
/// A step with missing or mistyped inputs fails.
StepVerdict check_step(const Step& step);

struct CertificateVerdict {
  bool valid = false;
  std::size_t verified = 0;
  std::size_t cited = 0;
  std::vector<std::size_t> failed_steps;
  /// Non-step consistency problems (conclusion vs steps).
  std::vector<std::string> problems;
};

/// Replays every step and checks the conclusion against them: the final
/// plane/quadric step gives the value, the gap-closure step gives the
/// excluded weights, and the weights the per-weight chain rules out above
/// the minimum match that list.
CertificateVerdict validate(const ProofCertificate& certificate);

inline constexpr std::string_view kCertificateSchemaVersion = "1";

nlohmann::ordered_json to_json(const Value& value);
nlohmann::ordered_json to_json(const Step& step);
nlohmann::ordered_json to_json(const GapReport& report);
nlohmann::ordered_json to_json(const ProofCertificate& certificate);

/// Inverse of to_json(ProofCertificate). Throws Error on schema mismatch.
ProofCertificate certificate_from_json(const nlohmann::ordered_json& json);

}  // namespace nodal
