#include "cli/reproduction.hpp"

#include <sstream>

#include "nodal/error.hpp"
#include "nodal/formulas.hpp"
#include "nodal/griesmer.hpp"
#include "nodal/matrix_io.hpp"
#include "nodal/surface.hpp"

namespace nodal::cli {
namespace {

std::string distribution_text(const WeightDistribution& d) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, c] : d.counts) {
    os << (first ? "" : ", ") << w << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

class Checks {
 public:
  void add(std::string name, const std::string& expected, const std::string& actual) {
    lines_.push_back(CheckLine{std::move(name), expected == actual, expected, actual});
  }
  void add(std::string name, std::int64_t expected, std::int64_t actual) {
    add(std::move(name), std::to_string(expected), std::to_string(actual));
  }
  void add_bool(std::string name, bool actual) { add(std::move(name), "true", actual ? "true" : "false"); }

  /// Runs fn; an exception becomes a failed line instead of aborting the run.
  template <typename Fn>
  void guarded(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      lines_.push_back(CheckLine{name, false, "no error", std::string("error: ") + e.what()});
    }
  }

  void append(const VerificationReport& report) {
    for (const CheckLine& l : report.lines) lines_.push_back(CheckLine{report.title + ": " + l.name, l.pass, l.expected, l.actual});
  }

  std::vector<CheckLine> take() { return std::move(lines_); }

 private:
  std::vector<CheckLine> lines_;
};

std::string code_params(const LinearCode& code, const EnumerationOptions& opt) {
  std::ostringstream os;
  os << '[' << code.length() << ',' << code.dimension() << ',' << (code.dimension() ? minimum_distance(code, opt) : 0)
     << ']';
  return os.str();
}

void check_codes(Checks& c, const ReproductionFixtures& fx) {
  const EnumerationOptions opt{30, fx.threads};
  c.guarded("kummer code", [&] {
    c.add("kummer weight distribution", "{0:1, 8:30, 16:1}", distribution_text(weight_distribution(fx.kummer, opt)));
    c.add("kummer [n,k,d]", "[16,5,8]", code_params(fx.kummer, opt));
    c.add("kummer parity", "doubly-even", std::string(to_string(classify_parity(fx.kummer, opt))));
    c.add_bool("kummer self-orthogonal", is_self_orthogonal(fx.kummer));
    bool all_doubly_even = true;
    std::int64_t words = 0;
    for (const BitWord& w : enumerate_codewords(fx.kummer, opt)) {
      if (w.weight() != 8) continue;
      ++words;
      const auto proj = project_onto_support(fx.kummer, w);
      all_doubly_even = all_doubly_even && classify_parity(proj.image, opt) == ParityClass::doubly_even;
    }
    c.add("kummer weight-8 words", 30, words);
    c.add_bool("kummer projections onto weight-8 words are doubly even", all_doubly_even);
  });
  c.guarded("togliatti code", [&] {
    c.add("togliatti weight distribution", "{0:1, 16:31}", distribution_text(weight_distribution(fx.togliatti, opt)));
    c.add("togliatti [n,k,d]", "[31,5,16]", code_params(fx.togliatti, opt));
    c.add("togliatti parity", "doubly-even", std::string(to_string(classify_parity(fx.togliatti, opt))));
    c.add_bool("togliatti self-orthogonal", is_self_orthogonal(fx.togliatti));
    c.add("simplex construction from columns matches togliatti distribution",
          distribution_text(weight_distribution(fx.togliatti, opt)),
          distribution_text(weight_distribution(simplex_code_from_columns(5), opt)));
  });
  c.guarded("cayley code", [&] {
    const LinearCode cayley = cayley_code();
    c.add("cayley [n,k,d]", "[4,1,4]", code_params(cayley, opt));
    c.add("cayley weight distribution", "{0:1, 4:1}", distribution_text(weight_distribution(cayley, opt)));
  });
  for (const auto& [file, code] : {std::pair{"kummer.txt", &fx.kummer}, std::pair{"togliatti.txt", &fx.togliatti}}) {
    const std::string name = std::string("data file ") + file + " parses to the built-in code";
    try {
      const LinearCode parsed = read_generator_file(fx.data_dir / file);
      c.add(name, "equal", parsed == *code ? "equal" : "different");
    } catch (const std::exception& e) {
      c.add(name, "equal", std::string("error: ") + e.what());
    }
  }
}

void check_griesmer(Checks& c) {
  c.add("griesmer max k for n=16, d=8", 5, static_cast<std::int64_t>(griesmer_max_dim(16, 8)));
  c.add("griesmer max k for n=31, d=16", 5, static_cast<std::int64_t>(griesmer_max_dim(31, 16)));
  c.add("griesmer min n for k=5, d=16", 31, static_cast<std::int64_t>(griesmer_min_length(5, 16)));
  c.add("griesmer min n for k=5, d=8", 16, static_cast<std::int64_t>(griesmer_min_length(5, 8)));
  c.add("griesmer min n for k=12, d=32", 69, static_cast<std::int64_t>(griesmer_min_length(12, 32)));
  c.add("griesmer max k for n=65, d=32", 8, static_cast<std::int64_t>(griesmer_max_dim(65, 32)));
}

void check_surfaces(Checks& c) {
  const std::int64_t nodes[] = {0, 1, 4, 16, 31, 65};
  for (std::int64_t d = 1; d <= 6; ++d) {
    c.add("max nodes degree " + std::to_string(d), nodes[d - 1], max_nodes(d));
  }
  const std::pair<std::int64_t, std::int64_t> betti[] = {{3, 7}, {4, 22}, {5, 53}, {6, 106}};
  for (const auto& [s, b2] : betti) c.add("b2 of resolution, s=" + std::to_string(s), b2, b2_resolution(s));
  const std::tuple<std::int64_t, std::int64_t, std::int64_t> dims[] = {{3, 4, 1}, {4, 16, 5}, {5, 31, 5}, {6, 65, 12}};
  for (const auto& [s, mu, k] : dims) {
    c.add("dim C_S lower bound, s=" + std::to_string(s) + " mu=" + std::to_string(mu), k,
          dim_lower_bound(NodalSurface::make(s, mu), EvenSetParity::strict));
  }
  c.add("strict weight modulus s=5", 4, strict_weight_modulus(5));
  c.add("strict weight modulus s=6", 8, strict_weight_modulus(6));
  c.add("strict weight modulus s=7", 4, strict_weight_modulus(7));
  c.add("weak weight residue s=4", 2, weak_weight_residue(4));
  c.add("weak weight residue s=6", 3, weak_weight_residue(6));
  c.add("weak weight residue s=8", 0, weak_weight_residue(8));
}

void check_chi(Checks& c) {
  // chi(s, v, w) = constant - w/4 on the whole weight line.
  struct Form {
    std::int64_t s, v;
    ChiValue constant;
    const char* text;
  };
  const Form forms[] = {
      {4, 1, ChiValue(10, 4), "(10-w)/4"}, {6, 1, ChiValue(35, 4), "(35-w)/4"}, {6, 3, ChiValue(35, 4), "(35-w)/4"},
      {8, 3, ChiValue(21), "21-w/4"},      {8, 5, ChiValue(21), "21-w/4"},      {5, 2, ChiValue(5), "5-w/4"},
      {6, 2, ChiValue(8), "8-w/4"},        {7, 2, ChiValue(14), "14-w/4"},      {7, 4, ChiValue(14), "14-w/4"},
      {8, 4, ChiValue(20), "20-w/4"},      {10, 6, ChiValue(40), "40-w/4"},
  };
  for (const Form& f : forms) {
    const bool matches = chi(f.s, f.v, 0) == f.constant && chi(f.s, f.v, 4) - chi(f.s, f.v, 0) == ChiValue(-1);
    c.add("chi(" + std::to_string(f.s) + "," + std::to_string(f.v) + ",w) = " + f.text, f.text,
          matches ? f.text : to_string(chi(f.s, f.v, 0)) + " at w=0");
  }
  const std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t> values[] = {
      {3, 2, 4, 3}, {4, 2, 8, 2}, {4, 1, 6, 1}, {6, 1, 15, 5}, {8, 3, 28, 14}, {10, 6, 80, 20}};
  for (const auto& [s, v, w, expected] : values) {
    c.add("chi(" + std::to_string(s) + "," + std::to_string(v) + "," + std::to_string(w) + ")", std::to_string(expected),
          to_string(chi(s, v, w)));
  }
  c.add("serre dual twist s=8 v=5", 3, serre_dual_twist(8, 5));
  c.add("serre dual twist s=6 v=1", 3, serre_dual_twist(6, 1));
  c.add("serre dual twist s=10 v=6", 6, serre_dual_twist(10, 6));
}

void check_contact_weights(Checks& c) {
  for (const auto& [s, w] : {std::pair{4, 6}, {6, 15}, {8, 28}}) {
    c.add("plane contact weight s=" + std::to_string(s), w, plane_contact_weight(s));
  }
  for (const auto& [s, w] : {std::pair{5, 16}, {6, 24}, {7, 36}}) {
    c.add("quadric contact weight s=" + std::to_string(s), w, quadric_contact_weight(s));
  }
  for (const auto& [s, v, w] : {std::tuple{6, 3, 27}, {7, 4, 42}, {8, 5, 60}, {10, 6, 120}}) {
    c.add("unstable bound s=" + std::to_string(s) + " v=" + std::to_string(v), w, unstable_lower_bound(s, v));
  }
  for (const auto& [s, v, w] : {std::tuple{8, 5, 60}, {7, 4, 42}, {10, 6, 120}}) {
    c.add("reduced contact bound s=" + std::to_string(s) + " v=" + std::to_string(v), w,
          reduced_contact_lower_bound(s, v));
  }
  c.add("nodal contact count s=4 v=1", 6, contact_count_nodal(4, 1, 0));
  c.add("nodal contact count s=5 v=2 beta=1", 16, contact_count_nodal(5, 2, 1));
  c.add("nodal contact count s=6 v=3", 27, contact_count_nodal(6, 3, 0));
}

void check_certificates(Checks& c, const ReproductionFixtures& fx) {
  c.guarded("certificates", [&] {
    for (const ProofCertificate& cert : derive_all_gaps(fx.threads)) {
      const CertificateVerdict v = validate(cert);
      c.add("certificate " + std::string(to_string(cert.parity)) + " s=" + std::to_string(cert.degree) + " replays",
            "valid", v.valid ? "valid" : "invalid");
    }
    const ProofCertificate sextic = sextic_dim_certificate();
    c.add("sextic dimension certificate replays", "valid", validate(sextic).valid ? "valid" : "invalid");
    c.add("sextic dimension", 12, sextic.value);
    std::int64_t griesmer_len = 0;
    for (const Step& s : sextic.steps) {
      if (s.rule == Rule::griesmer) griesmer_len = std::get<std::int64_t>(s.asserted_output);
    }
    c.add("sextic griesmer length for k=12, d=32", 69, griesmer_len);
  });
}

}  // namespace

ReproductionFixtures default_fixtures(const std::filesystem::path& data_dir) {
  return ReproductionFixtures{kummer_code(), togliatti_code(), data_dir, 1};
}

std::vector<CheckLine> run_reproduction_checks(const ReproductionFixtures& fixtures) {
  Checks c;
  check_codes(c, fixtures);
  c.guarded("griesmer", [&] { check_griesmer(c); });
  c.guarded("surfaces", [&] { check_surfaces(c); });
  c.guarded("chi", [&] { check_chi(c); });
  c.guarded("contact weights", [&] { check_contact_weights(c); });
  c.guarded("minimal weights", [&] { c.append(verify_theorem_main()); });
  c.guarded("gaps", [&] { c.append(verify_corollary_gaps()); });
  c.guarded("known sets", [&] { c.append(verify_concluding_table()); });
  c.guarded("cohomology", [&] { c.append(verify_example_cohomology_tables()); });
  check_certificates(c, fixtures);
  return c.take();
}

}  // namespace nodal::cli
