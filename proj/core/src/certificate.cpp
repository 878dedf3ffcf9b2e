#include "nodal/certificate.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "nodal/error.hpp"
#include "nodal/formulas.hpp"
#include "nodal/griesmer.hpp"
#include "nodal/surface.hpp"

namespace nodal {
namespace {

struct RuleName {
  Rule rule;
  std::string_view name;
};

constexpr std::array<RuleName, 17> kRuleNames{{
    {Rule::divisibility, "divisibility"},
    {Rule::chi_eval, "chi-eval"},
    {Rule::serre_dual, "serre-dual"},
    {Rule::h0_lower_bound, "h0-lower-bound"},
    {Rule::instability_exclusion, "instability-exclusion"},
    {Rule::plane_conclusion, "plane-conclusion"},
    {Rule::quadric_conclusion, "quadric-conclusion"},
    {Rule::hypothesis, "hypothesis"},
    {Rule::deviation_note, "deviation-note"},
    {Rule::dimension_bound, "dimension-bound"},
    {Rule::griesmer, "griesmer"},
    {Rule::inequality, "inequality"},
    {Rule::trivial_kernel, "trivial-kernel"},
    {Rule::projection_divisibility, "projection-divisibility"},
    {Rule::self_orthogonal_bound, "self-orthogonal-bound"},
    {Rule::dimension_squeeze, "dimension-squeeze"},
    {Rule::gap_closure, "gap-closure"},
}};

// Thrown while re-evaluating a step whose inputs are malformed.
struct BadStep {};

template <typename T>
const T& get_input(const Step& step, std::string_view name) {
  const Value* v = step.input(name);
  if (v == nullptr) throw BadStep{};
  const T* p = std::get_if<T>(v);
  if (p == nullptr) throw BadStep{};
  return *p;
}

bool has_input(const Step& step, std::string_view name) { return step.input(name) != nullptr; }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

WeightList lattice_between(std::int64_t modulus, std::int64_t residue, std::int64_t lower, std::int64_t upper) {
  WeightList out;
  for (std::int64_t w = lower + 1; w < upper; ++w) {
    if (((w - residue) % modulus + modulus) % modulus == 0) out.push_back(w);
  }
  return out;
}

// Recomputes the output a step claims; throws BadStep on malformed inputs or
// violated side conditions.
Value recompute(const Step& step) {
  switch (step.rule) {
    case Rule::divisibility: {
      const auto s = get_input<std::int64_t>(step, "degree");
      const auto weak = get_input<std::int64_t>(step, "weak");
      const auto modulus = get_input<std::int64_t>(step, "modulus");
      const auto residue = get_input<std::int64_t>(step, "residue");
      if (weak == 0) return modulus == strict_weight_modulus(s) && residue == 0;
      return s % 2 == 0 && modulus == 4 && residue == weak_weight_residue(s);
    }
    case Rule::chi_eval:
      return chi(get_input<std::int64_t>(step, "degree"), get_input<std::int64_t>(step, "twist"),
                 get_input<std::int64_t>(step, "weight"));
    case Rule::serre_dual: {
      const auto s = get_input<std::int64_t>(step, "degree");
      const auto v = get_input<std::int64_t>(step, "twist");
      const std::int64_t dual = serre_dual_twist(s, v);
      if (chi(s, v, 0) != chi(s, dual, 0)) throw BadStep{};
      return dual;
    }
    case Rule::h0_lower_bound: {
      const auto& c = get_input<ChiValue>(step, "chi");
      if (!is_integral(c)) throw BadStep{};
      if (get_input<bool>(step, "self_dual")) return ceil_div(c.numerator(), 2);
      return c.numerator() - get_input<std::int64_t>(step, "h2_bound");
    }
    case Rule::instability_exclusion: {
      const auto s = get_input<std::int64_t>(step, "degree");
      const auto v = get_input<std::int64_t>(step, "twist");
      const auto bound = get_input<std::int64_t>(step, "bound");
      if (bound != unstable_lower_bound(s, v)) throw BadStep{};
      return get_input<std::int64_t>(step, "weight") < bound;
    }
    case Rule::plane_conclusion:
      return plane_contact_weight(get_input<std::int64_t>(step, "degree"));
    case Rule::quadric_conclusion:
      return quadric_contact_weight(get_input<std::int64_t>(step, "degree"));
    case Rule::hypothesis:
      return step.asserted_output;
    case Rule::deviation_note: {
      const auto s = get_input<std::int64_t>(step, "degree");
      const auto v = get_input<std::int64_t>(step, "twist");
      if (has_input(step, "stated_threshold")) {
        const auto used = get_input<std::int64_t>(step, "used_threshold");
        if (used != unstable_lower_bound(s, v)) throw BadStep{};
        return get_input<std::int64_t>(step, "stated_threshold") != used;
      }
      if (has_input(step, "printed_bound")) {
        const auto& printed = get_input<ChiValue>(step, "printed_bound");
        const auto used = get_input<std::int64_t>(step, "used_bound");
        if (printed != printed_unstable_bound(s, v) || used != unstable_lower_bound(s, v)) throw BadStep{};
        return printed != ChiValue(used);
      }
      if (has_input(step, "stated_weight")) {
        const auto stated = get_input<std::int64_t>(step, "stated_weight");
        const auto used = get_input<std::int64_t>(step, "used_weight");
        return !is_integral(chi(s, v, stated)) && is_integral(chi(s, v, used));
      }
      throw BadStep{};
    }
    case Rule::dimension_bound: {
      const auto s = get_input<std::int64_t>(step, "degree");
      const auto nodes = get_input<std::int64_t>(step, "nodes");
      if (get_input<std::int64_t>(step, "b2") != b2_resolution(s)) throw BadStep{};
      return dim_lower_bound(NodalSurface{s, nodes}, EvenSetParity::strict);
    }
    case Rule::griesmer: {
      const auto k = get_input<std::int64_t>(step, "k");
      const auto d = get_input<std::int64_t>(step, "d");
      if (k < 1 || d < 1) throw BadStep{};
      return static_cast<std::int64_t>(griesmer_min_length(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(d)));
    }
    case Rule::inequality:
      return get_input<std::int64_t>(step, "lhs") > get_input<std::int64_t>(step, "rhs");
    case Rule::trivial_kernel: {
      const auto n = get_input<std::int64_t>(step, "length");
      const auto ww = get_input<std::int64_t>(step, "word_weight");
      const auto& admissible = get_input<WeightList>(step, "admissible");
      const std::set<std::int64_t> allowed(admissible.begin(), admissible.end());
      if (!allowed.contains(ww)) throw BadStep{};
      for (std::int64_t a : admissible) {
        if (a + ww <= n && allowed.contains(a + ww)) return false;
      }
      return true;
    }
    case Rule::projection_divisibility: {
      const auto modulus = get_input<std::int64_t>(step, "modulus");
      if (modulus < 2 || modulus % 2 != 0) throw BadStep{};
      return modulus / 2;
    }
    case Rule::self_orthogonal_bound: {
      const auto n = get_input<std::int64_t>(step, "length");
      if (get_input<std::int64_t>(step, "modulus") % 4 != 0) throw BadStep{};
      return n / 2;
    }
    case Rule::dimension_squeeze: {
      const auto lower = get_input<std::int64_t>(step, "lower");
      if (lower != get_input<std::int64_t>(step, "upper")) throw BadStep{};
      return lower;
    }
    case Rule::gap_closure: {
      const auto modulus = get_input<std::int64_t>(step, "modulus");
      if (modulus < 1) throw BadStep{};
      return lattice_between(modulus, get_input<std::int64_t>(step, "residue"), get_input<std::int64_t>(step, "lower"),
                             get_input<std::int64_t>(step, "upper"));
    }
  }
  throw BadStep{};
}

const Step* last_step_with(const ProofCertificate& cert, Rule rule) {
  const Step* found = nullptr;
  for (const Step& s : cert.steps) {
    if (s.rule == rule) found = &s;
  }
  return found;
}

const std::int64_t* as_int(const Value& v) { return std::get_if<std::int64_t>(&v); }

void check_gap_conclusion(const ProofCertificate& cert, CertificateVerdict& verdict) {
  const GapReport& gaps = *cert.gaps;
  auto problem = [&](std::string text) { verdict.problems.push_back(std::move(text)); };

  const Step* plane = last_step_with(cert, Rule::plane_conclusion);
  const Step* quadric = last_step_with(cert, Rule::quadric_conclusion);
  const Step* conclusion = (plane != nullptr) ? plane : quadric;
  if (conclusion == nullptr || (plane != nullptr && quadric != nullptr)) {
    problem("expected exactly one kind of plane/quadric conclusion");
    return;
  }
  const std::int64_t* min_weight = as_int(conclusion->asserted_output);
  if (min_weight == nullptr || *min_weight != cert.value || gaps.min_weight != cert.value) {
    problem("minimal weight differs from the conclusion step");
  }
  if (gaps.degree != cert.degree || gaps.parity != cert.parity) problem("gap report is for another case");

  const Step* lattice = last_step_with(cert, Rule::divisibility);
  const Step* closure = last_step_with(cert, Rule::gap_closure);
  if (lattice == nullptr || closure == nullptr) {
    problem("missing divisibility or gap-closure step");
    return;
  }
  const std::int64_t modulus = lattice->int_input("modulus");
  const std::int64_t residue = lattice->int_input("residue");
  if (closure->int_input("modulus") != modulus || closure->int_input("residue") != residue) {
    problem("gap-closure uses a different weight lattice");
  }
  if (closure->int_input("lower") != gaps.min_weight || closure->int_input("upper") != gaps.upper_endpoint) {
    problem("gap-closure interval differs from the gap report");
  }
  const auto* closed_form = std::get_if<WeightList>(&closure->asserted_output);
  if (closed_form == nullptr || *closed_form != gaps.excluded_weights) {
    problem("excluded weights differ from the gap-closure step");
  }

  // Per-weight chain: which weights were evaluated, up to where.
  WeightList chain;
  for (const Step& s : cert.steps) {
    if (s.rule == Rule::chi_eval) chain.push_back(s.int_input("weight"));
    if (s.rule == Rule::h0_lower_bound) {
      const std::int64_t* h0 = as_int(s.asserted_output);
      if (h0 == nullptr || *h0 < 1) problem("an h0 lower bound does not force a contact surface");
    }
  }
  std::optional<std::int64_t> threshold;
  for (const Step& s : cert.steps) {
    if (s.rule != Rule::instability_exclusion) continue;
    const std::int64_t bound = s.int_input("bound");
    if (threshold && *threshold != bound) problem("instability steps use different bounds");
    threshold = bound;
    if (s.asserted_output != Value{true}) problem("an instability step does not exclude its weight");
  }
  if (chain.empty()) return;  // base cases without a chi chain
  const std::int64_t chain_end = threshold ? *threshold : gaps.min_weight + 1;
  const WeightList expected_chain = lattice_between(modulus, residue, 0, chain_end);
  if (chain != expected_chain) problem("chi chain does not cover every admissible weight below its end");

  WeightList chain_excluded;
  std::copy_if(chain.begin(), chain.end(), std::back_inserter(chain_excluded),
               [&](std::int64_t w) { return w > gaps.min_weight; });
  if (chain_excluded != gaps.excluded_weights) problem("chain-excluded weights differ from the closed-form gap");
}

}  // namespace

std::string_view to_string(EvenSetParity parity) noexcept {
  return parity == EvenSetParity::strict ? "strict" : "weak";
}

EvenSetParity parse_parity(std::string_view text) {
  if (text == "strict") return EvenSetParity::strict;
  if (text == "weak") return EvenSetParity::weak;
  throw DomainError("parity must be 'strict' or 'weak', got '" + std::string(text) + "'");
}

std::string_view to_string(Rule rule) noexcept {
  for (const auto& r : kRuleNames) {
    if (r.rule == rule) return r.name;
  }
  return "unknown";
}

Rule parse_rule(std::string_view text) {
  for (const auto& r : kRuleNames) {
    if (r.name == text) return r.rule;
  }
  throw Error("unknown certificate rule '" + std::string(text) + "'");
}

std::string to_string(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, ChiValue>) {
          return to_string(v);
        } else {
          std::string out = "[";
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i != 0) out += ", ";
            out += std::to_string(v[i]);
          }
          return out + "]";
        }
      },
      value);
}

const Value* Step::input(std::string_view name) const {
  for (const auto& [key, value] : inputs) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::int64_t Step::int_input(std::string_view name) const {
  const Value* v = input(name);
  const std::int64_t* p = v != nullptr ? std::get_if<std::int64_t>(v) : nullptr;
  if (p == nullptr) throw Error("step " + std::string(to_string(rule)) + " has no integer input '" + std::string(name) + "'");
  return *p;
}

std::string_view to_string(StepVerdict verdict) noexcept {
  switch (verdict) {
    case StepVerdict::verified:
      return "verified";
    case StepVerdict::failed:
      return "failed";
    case StepVerdict::cited:
      return "cited";
  }
  return "unknown";
}

StepVerdict check_step(const Step& step) {
  if (step.rule == Rule::hypothesis) return StepVerdict::cited;
  try {
    return recompute(step) == step.asserted_output ? StepVerdict::verified : StepVerdict::failed;
  } catch (const BadStep&) {
    return StepVerdict::failed;
  } catch (const Error&) {
    return StepVerdict::failed;
  }
}

CertificateVerdict validate(const ProofCertificate& certificate) {
  CertificateVerdict verdict;
  for (std::size_t i = 0; i < certificate.steps.size(); ++i) {
    switch (check_step(certificate.steps[i])) {
      case StepVerdict::verified:
        ++verdict.verified;
        break;
      case StepVerdict::cited:
        ++verdict.cited;
        break;
      case StepVerdict::failed:
        verdict.failed_steps.push_back(i);
        break;
    }
  }
  try {
    if (certificate.gaps) {
      check_gap_conclusion(certificate, verdict);
    } else {
      const Step* squeeze = last_step_with(certificate, Rule::dimension_squeeze);
      const Step* lower = last_step_with(certificate, Rule::dimension_bound);
      const Step* upper = last_step_with(certificate, Rule::self_orthogonal_bound);
      if (squeeze == nullptr || lower == nullptr || upper == nullptr) {
        verdict.problems.emplace_back("dimension certificate lacks its bound steps");
      } else {
        if (squeeze->asserted_output != Value{certificate.value}) {
          verdict.problems.emplace_back("concluded dimension differs from the squeeze step");
        }
        if (Value{squeeze->int_input("lower")} != lower->asserted_output ||
            Value{squeeze->int_input("upper")} != upper->asserted_output) {
          verdict.problems.emplace_back("squeeze does not use the derived bounds");
        }
      }
    }
  } catch (const Error& e) {
    verdict.problems.emplace_back(e.what());
  }
  verdict.valid = verdict.failed_steps.empty() && verdict.problems.empty();
  return verdict;
}

nlohmann::ordered_json to_json(const Value& value) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ChiValue>) {
          return to_string(v);
        } else {
          return v;
        }
      },
      value);
}

nlohmann::ordered_json to_json(const Step& step) {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [key, value] : step.inputs) inputs[key] = to_json(value);
  nlohmann::ordered_json j;
  j["rule"] = std::string(to_string(step.rule));
  j["inputs"] = std::move(inputs);
  j["asserted_output"] = to_json(step.asserted_output);
  j["quote"] = step.quote;
  return j;
}

nlohmann::ordered_json to_json(const GapReport& report) {
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["parity"] = std::string(to_string(report.parity));
  j["min_weight"] = report.min_weight;
  j["excluded_weights"] = report.excluded_weights;
  j["upper_endpoint"] = report.upper_endpoint;
  return j;
}

nlohmann::ordered_json to_json(const ProofCertificate& certificate) {
  nlohmann::ordered_json j;
  j["schema_version"] = std::string(kCertificateSchemaVersion);
  j["topic"] = certificate.topic;
  j["degree"] = certificate.degree;
  j["parity"] = std::string(to_string(certificate.parity));
  j["value"] = certificate.value;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const Step& s : certificate.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  j["conclusion"] = certificate.gaps ? to_json(*certificate.gaps) : nlohmann::ordered_json(nullptr);
  return j;
}

namespace {

Value value_from_json(const nlohmann::ordered_json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_array()) return j.get<WeightList>();
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return ChiValue(std::stoll(text));
      return ChiValue(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
      throw Error("malformed rational value '" + text + "'");
    }
  }
  throw Error("unsupported value in certificate: " + j.dump());
}

}  // namespace

ProofCertificate certificate_from_json(const nlohmann::ordered_json& json) {
  try {
    if (json.at("schema_version").get<std::string>() != kCertificateSchemaVersion) {
      throw Error("unsupported certificate schema version " + json.at("schema_version").dump());
    }
    ProofCertificate cert;
    cert.topic = json.at("topic").get<std::string>();
    cert.degree = json.at("degree").get<std::int64_t>();
    cert.parity = parse_parity(json.at("parity").get<std::string>());
    cert.value = json.at("value").get<std::int64_t>();
    for (const auto& js : json.at("steps")) {
      Step step;
      step.rule = parse_rule(js.at("rule").get<std::string>());
      for (const auto& [key, value] : js.at("inputs").items()) step.inputs.emplace_back(key, value_from_json(value));
      step.asserted_output = value_from_json(js.at("asserted_output"));
      step.quote = js.at("quote").get<std::string>();
      cert.steps.push_back(std::move(step));
    }
    const auto& conclusion = json.at("conclusion");
    if (!conclusion.is_null()) {
      GapReport r;
      r.degree = conclusion.at("degree").get<std::int64_t>();
      r.parity = parse_parity(conclusion.at("parity").get<std::string>());
      r.min_weight = conclusion.at("min_weight").get<std::int64_t>();
      r.excluded_weights = conclusion.at("excluded_weights").get<WeightList>();
      r.upper_endpoint = conclusion.at("upper_endpoint").get<std::int64_t>();
      cert.gaps = r;
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace nodal
