#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli/reproduction.hpp"
#include "cli/report.hpp"
#include "nodal/bound_engine.hpp"
#include "nodal/error.hpp"
#include "nodal/formulas.hpp"
#include "nodal/griesmer.hpp"
#include "nodal/matrix_io.hpp"
#include "nodal/surface.hpp"

namespace nodal::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool as_json = false;
  std::string output;
  unsigned threads = 1;
  std::string data_dir = NODAL_DEFAULT_DATA_DIR;

  std::string file;
  std::string word;
  std::optional<std::uint64_t> n, k;
  std::uint64_t d = 0;
  std::int64_t degree = 0, twist = 0, weight = 0, nodes = 0;
  bool weak = false;
  std::string parity = "strict";
};

EnumerationOptions enumeration(const Options& o) { return EnumerationOptions{30, o.threads}; }

json check_lines_json(const std::vector<CheckLine>& lines) {
  json arr = json::array();
  for (const CheckLine& l : lines) {
    arr.push_back(json{{"name", l.name}, {"pass", l.pass}, {"expected", l.expected}, {"actual", l.actual}});
  }
  return arr;
}

Report code_analyze(const Options& o) {
  const LinearCode code = read_generator_file(o.file);
  const EnumerationOptions opt = enumeration(o);
  Report r{"code analyze", Status::info, json::object()};
  r.payload["n"] = code.length();
  r.payload["k"] = code.dimension();
  r.payload["minimum_distance"] = code.dimension() ? json(minimum_distance(code, opt)) : json(nullptr);
  json dist = json::object();
  for (const auto& [w, c] : weight_distribution(code, opt).counts) dist[std::to_string(w)] = c;
  r.payload["weight_distribution"] = dist;
  r.payload["parity"] = nodal::to_string(classify_parity(code, opt));
  r.payload["self_orthogonal"] = is_self_orthogonal(code);
  r.payload["dual_dimension"] = dual_code(code).dimension();
  json basis = json::array();
  for (const BitWord& row : code.basis()) basis.push_back(row.to_string());
  r.payload["basis"] = basis;
  return r;
}

Report code_project(const Options& o) {
  const LinearCode code = read_generator_file(o.file);
  const BitWord w = BitWord::from_string(o.word);
  const Projection p = project_onto_support(code, w);
  const EnumerationOptions opt = enumeration(o);
  Report r{"code project", Status::info, json::object()};
  r.payload["word"] = w.to_string();
  json sup = json::array();
  for (std::size_t i : support(w)) sup.push_back(i);
  r.payload["support"] = sup;
  r.payload["image_length"] = p.image.length();
  r.payload["image_dimension"] = p.image.dimension();
  r.payload["kernel_dimension"] = p.kernel_dimension;
  r.payload["image_parity"] = nodal::to_string(classify_parity(p.image, opt));
  json dist = json::object();
  for (const auto& [wt, c] : weight_distribution(p.image, opt).counts) dist[std::to_string(wt)] = c;
  r.payload["image_weight_distribution"] = dist;
  return r;
}

Report griesmer(const Options& o) {
  if (o.n.has_value() == o.k.has_value()) throw DomainError("griesmer: give exactly one of --n and --k");
  Report r{"griesmer", Status::info, json::object()};
  r.payload["d"] = o.d;
  if (o.n) {
    r.payload["n"] = *o.n;
    r.payload["max_k"] = griesmer_max_dim(*o.n, o.d);
  } else {
    r.payload["k"] = *o.k;
    r.payload["min_n"] = griesmer_min_length(*o.k, o.d);
  }
  return r;
}

Report chi_command(const Options& o) {
  const ChiValue c = chi(o.degree, o.twist, o.weight);
  Report r{"chi", Status::info, json::object()};
  r.payload["degree"] = o.degree;
  r.payload["twist"] = o.twist;
  r.payload["weight"] = o.weight;
  r.payload["chi"] = nodal::to_string(c);
  r.payload["integral"] = is_integral(c);
  r.payload["dual_twist"] = serre_dual_twist(o.degree, o.twist);
  return r;
}

Report emin_command(const Options& o) {
  Report r{"emin", Status::info, json::object()};
  r.payload["degree"] = o.degree;
  r.payload["parity"] = o.weak ? "weak" : "strict";
  r.payload["min_weight"] = o.weak ? e_bar_min(o.degree) : e_min(o.degree);
  return r;
}

Report gaps_command(const Options& o) {
  const ProofCertificate cert = derive_gaps(o.degree, parse_parity(o.parity));
  const CertificateVerdict verdict = validate(cert);
  Report r{"gaps", verdict.valid ? Status::pass : Status::fail, json::object()};
  r.payload["degree"] = cert.degree;
  r.payload["parity"] = nodal::to_string(cert.parity);
  r.payload["min_weight"] = cert.value;
  if (cert.gaps) {
    r.payload["excluded_weights"] = cert.gaps->excluded_weights;
    r.payload["excluded_compact"] = compact_progression(cert.gaps->excluded_weights);
    r.payload["upper_endpoint"] = cert.gaps->upper_endpoint;
  }
  json validation = json::object();
  validation["valid"] = verdict.valid;
  validation["verified"] = verdict.verified;
  validation["cited"] = verdict.cited;
  validation["failed_steps"] = verdict.failed_steps;
  validation["problems"] = verdict.problems;
  r.payload["validation"] = validation;
  json steps = json::array();
  for (const Step& s : cert.steps) {
    json js = to_json(s);
    js["verdict"] = nodal::to_string(check_step(s));
    steps.push_back(js);
  }
  r.payload["steps"] = steps;
  r.payload["certificate"] = to_json(cert);
  return r;
}

Report surface_bounds(const Options& o) {
  const NodalSurface surface = NodalSurface::make(o.degree, o.nodes);
  const SurfaceCodeProfile p = code_profile(surface);
  Report r{"surface bounds", Status::info, json::object()};
  r.payload["degree"] = surface.degree;
  r.payload["nodes"] = surface.node_count;
  r.payload["b2"] = b2_resolution(surface.degree);
  r.payload["dim_lower_bound_strict"] = p.dim_lower_bound_strict;
  r.payload["dim_lower_bound_weak"] = p.dim_lower_bound_even ? json(*p.dim_lower_bound_even) : json(nullptr);
  r.payload["strict_modulus"] = p.strict_modulus;
  r.payload["weak_residue"] = p.weak_residue ? json(*p.weak_residue) : json(nullptr);
  return r;
}

Report verify_all(const Options& o) {
  ReproductionFixtures fx = default_fixtures(o.data_dir);
  fx.threads = o.threads;
  const std::vector<CheckLine> lines = run_reproduction_checks(fx);
  std::size_t passed = 0;
  for (const CheckLine& l : lines) passed += l.pass ? 1 : 0;
  Report r{"verify paper", passed == lines.size() ? Status::pass : Status::fail, json::object()};
  r.payload["total"] = lines.size();
  r.payload["passed"] = passed;
  r.payload["checks"] = check_lines_json(lines);
  return r;
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass:
    case Status::info:
      return 0;
    case Status::fail:
      return 1;
    case Status::error:
      break;
  }
  return 2;
}

void emit(const Report& report, const Options& o, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw Error("cannot open output file: " + o.output);
    sink = &file;
  }
  if (o.as_json) {
    write_json(*sink, report);
  } else {
    write_text(*sink, report);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Binary codes of even sets of nodes on surfaces"};
  app.require_subcommand(1);
  app.add_flag("--json", o.as_json, "Emit JSON instead of text");
  app.add_option("--output", o.output, "Write the report to a file");
  app.add_option("--threads", o.threads, "Worker threads for enumeration (0 = all cores)");
  app.add_option("--data-dir", o.data_dir, "Directory with kummer.txt and togliatti.txt");

  std::string command;
  auto* code = app.add_subcommand("code", "Linear code analytics")->require_subcommand(1);
  code->fallthrough();
  auto* analyze = code->add_subcommand("analyze", "Parameters, weights and parity of a code");
  analyze->add_option("file", o.file)->required();
  analyze->fallthrough();
  auto* project = code->add_subcommand("project", "Projection onto the support of a codeword");
  project->add_option("file", o.file)->required();
  project->add_option("--word", o.word, "Codeword as a bit string")->required();
  project->fallthrough();

  auto* gr = app.add_subcommand("griesmer", "Griesmer bound");
  gr->add_option("--n", o.n);
  gr->add_option("--k", o.k);
  gr->add_option("--d", o.d)->required();
  gr->fallthrough();

  auto* ch = app.add_subcommand("chi", "Euler characteristic of the twisted bundle");
  ch->add_option("--degree", o.degree)->required();
  ch->add_option("--twist", o.twist)->required();
  ch->add_option("--weight", o.weight)->required();
  ch->fallthrough();

  auto* em = app.add_subcommand("emin", "Minimal weight of an even set");
  em->add_option("--degree", o.degree)->required();
  em->add_flag("--weak", o.weak);
  em->fallthrough();

  auto* ga = app.add_subcommand("gaps", "Gap certificate for one degree and parity");
  ga->add_option("--degree", o.degree)->required();
  ga->add_option("--parity", o.parity)->check(CLI::IsMember({"strict", "weak"}));
  ga->fallthrough();

  auto* su = app.add_subcommand("surface", "Nodal surface invariants")->require_subcommand(1);
  su->fallthrough();
  auto* bounds = su->add_subcommand("bounds", "Dimension bounds and weight classes");
  bounds->add_option("--degree", o.degree)->required();
  bounds->add_option("--nodes", o.nodes)->required();
  bounds->fallthrough();

  auto* ve = app.add_subcommand("verify", "Reproduce every published value")->require_subcommand(1);
  ve->fallthrough();
  auto* everything = ve->add_subcommand("paper", "Run all checks");
  everything->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::string name = "nodal";
  try {
    Report report;
    if (*analyze) {
      name = "code analyze";
      report = code_analyze(o);
    } else if (*project) {
      name = "code project";
      report = code_project(o);
    } else if (*gr) {
      name = "griesmer";
      report = griesmer(o);
    } else if (*ch) {
      name = "chi";
      report = chi_command(o);
    } else if (*em) {
      name = "emin";
      report = emin_command(o);
    } else if (*ga) {
      name = "gaps";
      report = gaps_command(o);
    } else if (*bounds) {
      name = "surface bounds";
      report = surface_bounds(o);
    } else {
      name = "verify paper";
      report = verify_all(o);
    }
    emit(report, o, out);
    return exit_code(report.status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    if (o.as_json) {
      Report report{name, Status::error, json{{"message", e.what()}}};
      if (const auto* pe = dynamic_cast<const ParseError*>(&e)) report.payload["line"] = pe->line();
      try {
        emit(report, o, out);
      } catch (const std::exception&) {
        write_json(out, report);
      }
    }
    return 2;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace nodal::cli
