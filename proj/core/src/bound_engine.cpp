#include "nodal/bound_engine.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

#include "nodal/error.hpp"
#include "nodal/formulas.hpp"
#include "nodal/surface.hpp"

namespace nodal {
namespace {

// How the h2 term of chi is controlled at the chain twist.
enum class H2Mode { vanishes, self_dual, at_most_one };

struct Recipe {
  std::int64_t degree;
  EvenSetParity parity;
  std::int64_t twist;
  H2Mode h2;
  std::string h2_quote;
  std::optional<std::int64_t> threshold_twist;
};

std::string twist_label(std::int64_t v) {
  if (v == 1) return "H";
  if (v == -1) return "-H";
  return std::to_string(v) + "H";
}

std::string bundle(std::int64_t v) { return "(" + twist_label(v) + " - E_w/2)"; }

std::optional<Recipe> recipe_for(std::int64_t s, EvenSetParity parity) {
  using P = EvenSetParity;
  if (parity == P::strict) {
    switch (s) {
      case 3:
        return Recipe{3, P::strict, 2, H2Mode::vanishes,
                      "h2" + bundle(2) + " = h0(-4H + E_w/2) = 0 by Serre duality, and h1" + bundle(2) +
                          " = 0 by Kodaira vanishing since 4H - E_w is ample",
                      std::nullopt};
      case 4:
        return Recipe{4, P::strict, 2, H2Mode::vanishes,
                      "h2" + bundle(2) + " = h0" + bundle(-2) + " = 0 by Serre duality and h^i(nH + E_w/2) = h^i(nH - E_w/2)",
                      std::nullopt};
      case 5:
        return Recipe{5, P::strict, 2, H2Mode::vanishes, "h2" + bundle(2) + " = h0(-E_w/2) = 0", std::nullopt};
      case 6:
        return Recipe{6, P::strict, 2, H2Mode::self_dual,
                      "h2" + bundle(2) + " = h0" + bundle(2) + ": the twist is its own Serre dual", std::nullopt};
      case 7:
        return Recipe{7, P::strict, 4, H2Mode::at_most_one,
                      "h2" + bundle(4) + " = h0" + bundle(2) +
                          " is 0 or 1: for s > 4 a quadric cutting out w is stable in degree 2",
                      4};
      case 8:
        return Recipe{8, P::strict, 4, H2Mode::self_dual,
                      "h2" + bundle(4) + " = h0" + bundle(4) + ": the twist is its own Serre dual", 4};
      case 10:
        return Recipe{10, P::strict, 6, H2Mode::self_dual,
                      "h2" + bundle(6) + " = h0" + bundle(6) + ": the twist is its own Serre dual", 6};
      default:
        return std::nullopt;
    }
  }
  switch (s) {
    case 4:
      return Recipe{4, P::weak, 1, H2Mode::vanishes,
                    "h2" + bundle(1) + " = h0" + bundle(-1) + " = 0 by Serre duality", std::nullopt};
    case 6:
      return Recipe{6, P::weak, 3, H2Mode::at_most_one,
                    "h2" + bundle(3) + " = h0" + bundle(1) +
                        " is 0 or 1: either w is stable in degree 1 or no plane cuts out w",
                    3};
    case 8:
      return Recipe{8, P::weak, 5, H2Mode::at_most_one,
                    "assume h0" + bundle(3) + " = h2" + bundle(5) + " <= 1 (to be contradicted)", 5};
    default:
      return std::nullopt;
  }
}

using Inputs = std::vector<std::pair<std::string, Value>>;

class CertificateBuilder {
 public:
  explicit CertificateBuilder(ProofCertificate& cert) : cert_(cert) {}

  void add(Rule rule, Inputs inputs, Value output, std::string quote) {
    cert_.steps.push_back(Step{rule, std::move(inputs), std::move(output), std::move(quote)});
  }

  void hypothesis(Inputs inputs, std::string quote) { add(Rule::hypothesis, std::move(inputs), true, std::move(quote)); }

 private:
  ProofCertificate& cert_;
};

std::int64_t h0_bound(const ChiValue& c, H2Mode mode) {
  switch (mode) {
    case H2Mode::vanishes:
      return c.numerator();
    case H2Mode::at_most_one:
      return c.numerator() - 1;
    case H2Mode::self_dual:
      return c.numerator() >= 0 ? (c.numerator() + 1) / 2 : -((-c.numerator()) / 2);
  }
  return 0;
}

ProofCertificate derive_weak_base_case() {
  ProofCertificate cert;
  cert.topic = "minimal-weight";
  cert.degree = 2;
  cert.parity = EvenSetParity::weak;
  CertificateBuilder b(cert);
  const std::int64_t residue = weak_weight_residue(2);
  b.add(Rule::divisibility,
        {{"degree", std::int64_t{2}}, {"weak", std::int64_t{1}}, {"modulus", std::int64_t{4}}, {"residue", residue}},
        true, "weakly even weights are the w with chi(H - E_w/2) integral");
  b.hypothesis({{"degree", std::int64_t{2}}},
               "quadric cone: every line through the vertex is cut out doubly by exactly one plane, so the "
               "even-set code is spanned by the single node and h0(H - E_w/2) = 2");
  b.hypothesis({{"degree", std::int64_t{2}}, {"twist", std::int64_t{1}}},
               "a weakly even set cut out by a plane on a quadric is unstable in degree 1");
  const std::int64_t min_weight = plane_contact_weight(2);
  b.add(Rule::plane_conclusion, {{"degree", std::int64_t{2}}}, min_weight,
        "a plane cuts out s(s-1)/2 nodes");
  const std::int64_t upper = std::max(smooth_cubic_weight(2), min_weight);
  const WeightList excluded;
  b.add(Rule::gap_closure,
        {{"modulus", std::int64_t{4}}, {"residue", residue}, {"lower", min_weight}, {"upper", upper}}, excluded,
        "no admissible weight lies strictly between the minimum and the smooth-cubic weight");
  cert.value = min_weight;
  cert.gaps = GapReport{2, EvenSetParity::weak, min_weight, excluded, upper};
  return cert;
}

WeightList lattice_up_to(std::int64_t modulus, std::int64_t residue, std::int64_t last) {
  WeightList out;
  for (std::int64_t w = 1; w <= last; ++w) {
    if (((w - residue) % modulus + modulus) % modulus == 0) out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::int64_t, EvenSetParity>> proven_cases() {
  std::vector<std::pair<std::int64_t, EvenSetParity>> cases;
  for (std::int64_t s : {3, 4, 5, 6, 7, 8, 10}) cases.emplace_back(s, EvenSetParity::strict);
  for (std::int64_t s : {2, 4, 6, 8}) cases.emplace_back(s, EvenSetParity::weak);
  return cases;
}

ProofCertificate derive_gaps(std::int64_t s, EvenSetParity parity) {
  if (parity == EvenSetParity::weak && s == 2) return derive_weak_base_case();
  const auto recipe = recipe_for(s, parity);
  if (!recipe) {
    throw UnprovenCase("the minimal " + std::string(to_string(parity)) + " even-set weight is not established for degree " +
                       std::to_string(s) + "; it is expected, but unproven, for surfaces of arbitrary degree");
  }
  const bool weak = parity == EvenSetParity::weak;
  const std::int64_t v = recipe->twist;

  ProofCertificate cert;
  cert.topic = "minimal-weight";
  cert.degree = s;
  cert.parity = parity;
  CertificateBuilder b(cert);

  // (1) admissible weight lattice
  const std::int64_t modulus = weak ? 4 : strict_weight_modulus(s);
  const std::int64_t residue = weak ? weak_weight_residue(s) : 0;
  b.add(Rule::divisibility,
        {{"degree", s}, {"weak", std::int64_t{weak ? 1 : 0}}, {"modulus", modulus}, {"residue", residue}}, true,
        weak ? "weakly even weights are the w with chi(H - E_w/2) integral"
             : (s % 2 == 0 ? "strictly even weights are divisible by 8 on surfaces of even degree"
                           : "strictly even weights are divisible by 4"));

  // (2) duality at the chain twist and the threshold
  const std::int64_t dual = serre_dual_twist(s, v);
  b.add(Rule::serre_dual, {{"degree", s}, {"twist", v}}, dual,
        "K = (s-4)H on the resolution, so twist v pairs with 2(s-4) - v and chi agrees at both");
  b.hypothesis({{"degree", s}, {"twist", v}, {"dual_twist", dual}}, recipe->h2_quote);

  std::optional<std::int64_t> threshold;
  if (recipe->threshold_twist) {
    const std::int64_t tv = *recipe->threshold_twist;
    threshold = unstable_lower_bound(s, tv);
    const ChiValue printed = printed_unstable_bound(s, tv);
    if (printed != ChiValue(*threshold)) {
      b.add(Rule::deviation_note,
            {{"degree", s}, {"twist", tv}, {"printed_bound", printed}, {"used_bound", *threshold}}, true,
            "the squared closed form for 2v = s+1 (resp. s+2) differs from s*v*(s-v)/2 from the reduced-surface "
            "bound; the latter is used");
    }
    if (s == 7 && !weak) {
      b.add(Rule::deviation_note,
            {{"degree", s}, {"twist", tv}, {"stated_threshold", std::int64_t{44}}, {"used_threshold", *threshold}},
            true, "threshold written as |w| < 44; the instability bound in degree 4 evaluates to 42");
    }
  }
  if (s == 4 && !weak) {
    b.add(Rule::deviation_note,
          {{"degree", s}, {"twist", v}, {"stated_weight", std::int64_t{9}}, {"used_weight", std::int64_t{8}}}, true,
          "weight written as 9, where chi(2H - E_w/2) is not an integer; the argument holds for weight 8");
  }

  // (3) every admissible weight below the threshold (or up to the minimum)
  const std::int64_t min_weight = weak ? plane_contact_weight(s) : quadric_contact_weight(s);
  const std::int64_t chain_last = threshold ? *threshold - 1 : min_weight;
  const WeightList chain = lattice_up_to(modulus, residue, chain_last);
  std::int64_t weakest_h0 = 0;
  for (std::int64_t w : chain) {
    const ChiValue c = chi(s, v, w);
    b.add(Rule::chi_eval, {{"degree", s}, {"twist", v}, {"weight", w}}, c, "Riemann-Roch on the resolution");
    const std::int64_t h0 = h0_bound(c, recipe->h2);
    Inputs in{{"chi", c}};
    if (recipe->h2 == H2Mode::self_dual) {
      in.emplace_back("self_dual", true);
    } else {
      in.emplace_back("self_dual", false);
      in.emplace_back("h2_bound", std::int64_t{recipe->h2 == H2Mode::at_most_one ? 1 : 0});
    }
    b.add(Rule::h0_lower_bound, std::move(in), h0, "h0 >= chi - h2 since h1 >= 0");
    weakest_h0 = h0;  // chi decreases with the weight
    if (threshold) {
      b.add(Rule::instability_exclusion,
            {{"degree", s}, {"twist", *recipe->threshold_twist}, {"weight", w}, {"bound", *threshold}}, true,
            "an even set unstable in this degree has at least the bound's weight");
    }
  }

  // (4) from a contact surface of low degree to the minimum
  const std::string surface = weak ? "plane" : "quadric";
  const std::int64_t low_degree = weak ? 1 : 2;
  if (!threshold) {
    b.hypothesis({{"degree", s}, {"twist", v}},
                 "h0" + bundle(v) + " >= 1 gives a surface of degree " + std::to_string(v) + " cutting out w");
  } else if (weak && s == 8) {
    b.hypothesis({{"degree", s}, {"twist", v}, {"h0_bound", weakest_h0}},
                 "h0" + bundle(5) + " >= " + std::to_string(weakest_h0) +
                     " makes w unstable in degree 5, which the weight bound excludes; "
                 "so h0" + bundle(3) + " >= 2");
    b.hypothesis({{"degree", s}},
                 "then w is semi-stable in degree 3 and stable in degree 1, so a plane cuts out w");
  } else {
    const std::int64_t tv = *recipe->threshold_twist;
    b.add(Rule::inequality, {{"lhs", weakest_h0}, {"rhs", std::int64_t{1}}}, weakest_h0 > 1,
          "h0" + bundle(tv) + " > 1, so w is not stable in degree " + std::to_string(tv));
    if (s == 10 && !weak) {
      b.add(Rule::inequality, {{"lhs", weakest_h0}, {"rhs", std::int64_t{4}}}, weakest_h0 > 4,
            "stability in degree 4 would force h0" + bundle(6) + " = 4");
    }
    b.hypothesis({{"degree", s}, {"twist", tv}},
                 "not unstable and not stable in degree " + std::to_string(tv) + ": w is semi-stable there and stable "
                 "in degree " + std::to_string(low_degree) + ", so a " + surface + " cuts out w");
  }
  if (weak) {
    b.add(Rule::plane_conclusion, {{"degree", s}}, min_weight, "a plane cuts out s(s-1)/2 nodes");
  } else {
    b.add(Rule::quadric_conclusion, {{"degree", s}}, min_weight,
          "a reduced quadric cuts out s(s-2) nodes for even s and (s-1)^2 for odd s");
  }

  // (5) the gap up to the smooth cubic (weak) or quartic (strict) weight
  const std::int64_t upper = std::max(weak ? smooth_cubic_weight(s) : smooth_quartic_weight(s), min_weight);
  WeightList excluded;
  for (std::int64_t w = min_weight + 1; w < upper; ++w) {
    if ((w - residue) % modulus == 0) excluded.push_back(w);
  }
  b.add(Rule::gap_closure, {{"modulus", modulus}, {"residue", residue}, {"lower", min_weight}, {"upper", upper}},
        excluded,
        weak ? "admissible weights strictly between the plane weight and the smooth-cubic weight 3s(s-3)/2"
             : "admissible weights strictly between the quadric weight and the smooth-quartic weight 2s(s-4)");

  cert.value = min_weight;
  cert.gaps = GapReport{s, parity, min_weight, std::move(excluded), upper};
  return cert;
}

std::vector<ProofCertificate> derive_all_gaps(unsigned threads) {
  const auto cases = proven_cases();
  std::vector<ProofCertificate> out;
  out.reserve(cases.size());
  if (threads == 1) {
    for (const auto& [s, p] : cases) out.push_back(derive_gaps(s, p));
    return out;
  }
  std::vector<std::future<ProofCertificate>> futures;
  futures.reserve(cases.size());
  for (const auto& [s, p] : cases) {
    futures.push_back(std::async(std::launch::async, [s = s, p = p] { return derive_gaps(s, p); }));
  }
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

WeightList expand_progression(std::string_view cell) {
  WeightList out;
  std::vector<std::string> tokens;
  std::string current;
  for (char c : cell) {
    if (c == ',') {
      tokens.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  if (!current.empty() || !tokens.empty()) tokens.push_back(current);

  bool pending_ellipsis = false;
  for (const std::string& t : tokens) {
    if (t == "..." || t == "\\ldots") {
      if (out.size() < 2) throw DomainError("ellipsis needs two preceding terms in '" + std::string(cell) + "'");
      pending_ellipsis = true;
      continue;
    }
    std::int64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(t, &used);
      if (used != t.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("bad term '" + t + "' in '" + std::string(cell) + "'");
    }
    if (pending_ellipsis) {
      const std::int64_t step = out[out.size() - 1] - out[out.size() - 2];
      if (step <= 0 || (value - out.back()) % step != 0 || value <= out.back()) {
        throw DomainError("ellipsis end does not continue the progression in '" + std::string(cell) + "'");
      }
      for (std::int64_t w = out.back() + step; w < value; w += step) out.push_back(w);
      pending_ellipsis = false;
    }
    out.push_back(value);
  }
  if (pending_ellipsis) throw DomainError("dangling ellipsis in '" + std::string(cell) + "'");
  return out;
}

std::string compact_progression(const WeightList& weights) {
  std::ostringstream os;
  bool arithmetic = weights.size() >= 4;
  for (std::size_t i = 2; arithmetic && i < weights.size(); ++i) {
    arithmetic = weights[i] - weights[i - 1] == weights[1] - weights[0];
  }
  if (arithmetic) {
    os << weights[0] << ',' << weights[1] << ",...," << weights.back();
    return os.str();
  }
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  return os.str();
}

bool VerificationReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

namespace {

std::string case_label(std::int64_t s, EvenSetParity p) {
  return std::string(to_string(p)) + " s=" + std::to_string(s);
}

std::string list_text(const WeightList& w) { return "[" + compact_progression(w) + "]"; }

std::string full_list_text(const WeightList& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + "]";
}

}  // namespace

VerificationReport verify_theorem_main() {
  VerificationReport report{"minimal weights", {}};
  for (const auto& [s, p] : proven_cases()) {
    const std::int64_t expected = p == EvenSetParity::strict ? e_min(s) : e_bar_min(s);
    const ProofCertificate cert = derive_gaps(s, p);
    const bool valid = validate(cert).valid;
    report.lines.push_back(CheckLine{"min weight " + case_label(s, p), valid && cert.value == expected,
                                     std::to_string(expected),
                                     std::to_string(cert.value) + (valid ? "" : " (certificate invalid)")});
  }
  return report;
}

VerificationReport verify_corollary_gaps() {
  struct Cell {
    std::int64_t degree;
    EvenSetParity parity;
    std::string_view compact;
  };
  static constexpr Cell kTable[] = {
      {6, EvenSetParity::weak, "19,23"},
      {8, EvenSetParity::weak, "32,36,\\ldots,56"},
      {6, EvenSetParity::strict, ""},
      {7, EvenSetParity::strict, "40"},
      {8, EvenSetParity::strict, "56"},
      {10, EvenSetParity::strict, "88,96,104,112"},
  };
  VerificationReport report{"excluded weights", {}};
  for (const Cell& cell : kTable) {
    const WeightList expected = expand_progression(cell.compact);
    const ProofCertificate cert = derive_gaps(cell.degree, cell.parity);
    const WeightList& actual = cert.gaps->excluded_weights;
    report.lines.push_back(CheckLine{"gap " + case_label(cell.degree, cell.parity) + " {" + std::string(cell.compact) + "}",
                                     actual == expected && validate(cert).valid, full_list_text(expected),
                                     full_list_text(actual)});
  }
  return report;
}

VerificationReport verify_concluding_table() {
  struct Row {
    std::int64_t degree;
    std::string_view compact;
  };
  static constexpr Row kTable[] = {
      {3, "4"},
      {4, "8,16"},
      {5, "16,20"},
      {6, "24,32,40"},
      {8, "48,64,72,80,\\ldots,128"},
      {10, "80,120,128,136,\\ldots,208"},
  };
  VerificationReport report{"known even sets", {}};
  for (const Row& row : kTable) {
    const WeightList weights = expand_progression(row.compact);
    const std::int64_t modulus = strict_weight_modulus(row.degree);
    const std::string label = "s=" + std::to_string(row.degree) + " {" + std::string(row.compact) + "}";

    const bool divisible =
        std::all_of(weights.begin(), weights.end(), [&](std::int64_t w) { return w % modulus == 0; });
    report.lines.push_back(CheckLine{"divisible by " + std::to_string(modulus) + " " + label, divisible, "true",
                                     divisible ? "true" : "false"});

    const ProofCertificate cert = derive_gaps(row.degree, EvenSetParity::strict);
    const WeightList& gap = cert.gaps->excluded_weights;
    WeightList inside;
    for (std::int64_t w : weights) {
      if (std::find(gap.begin(), gap.end(), w) != gap.end()) inside.push_back(w);
    }
    report.lines.push_back(CheckLine{"avoids gap " + list_text(gap) + " " + label, inside.empty(), "[]",
                                     full_list_text(inside)});

    const std::int64_t smallest = *std::min_element(weights.begin(), weights.end());
    report.lines.push_back(CheckLine{"smallest = e_min " + label, smallest == e_min(row.degree),
                                     std::to_string(e_min(row.degree)), std::to_string(smallest)});
  }
  return report;
}

VerificationReport verify_example_cohomology_tables() {
  struct Row {
    std::int64_t weight;
    std::int64_t twist;
    std::int64_t h0, h1, h2;
  };
  static constexpr Row kRows[] = {
      {8, 2, 2, 0, 0},  {8, 4, 8, 0, 0}, {16, 2, 0, 0, 0}, {16, 4, 6, 0, 0},
      {6, 1, 1, 0, 0},  {6, 3, 5, 0, 0}, {10, 1, 0, 0, 0}, {10, 3, 4, 0, 0},
  };
  VerificationReport report{"quartic cohomology tables", {}};
  for (const Row& r : kRows) {
    const ChiValue c = chi(4, r.twist, r.weight);
    const std::int64_t euler = r.h0 - r.h1 + r.h2;
    std::ostringstream name;
    name << "chi(4," << r.twist << "," << r.weight << ") = " << r.h0 << "-" << r.h1 << "+" << r.h2;
    report.lines.push_back(CheckLine{name.str(), c == ChiValue(euler), std::to_string(euler), to_string(c)});
  }
  return report;
}

}  // namespace nodal
