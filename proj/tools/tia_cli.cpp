// SPDX-License-Identifier: Apache-2.0
// tia: command-line front end for element analysis, mesh audits, error
// sweeps and the property suites.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tia/csv.hpp"
#include "tia/errors.hpp"
#include "tia/experiments.hpp"
#include "tia/json_io.hpp"
#include "tia/mesh.hpp"
#include "tia/sobolev.hpp"
#include "tia/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kPropertyFailure = 1, kInputError = 2, kDegenerate = 3, kInvalidP = 4 };

int exit_code_for(tia::Errc c) {
  switch (c) {
    case tia::Errc::DegenerateElement:
    case tia::Errc::CollinearPoints:
    case tia::Errc::DegenerateProjection:
    case tia::Errc::IllConditioned:
      return kDegenerate;
    case tia::Errc::InvalidPForKM:
      return kInvalidP;
    case tia::Errc::Internal:
      return kPropertyFailure;
    default:
      return kInputError;
  }
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return tia::kInfinity;
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) tia::raise(tia::Errc::ParseError, "cannot read p from '" + text + "'");
  return p;
}

unsigned thread_count(unsigned flag) {
  if (const char* env = std::getenv("TIA_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      tia::raise(tia::Errc::ParseError, std::string("TIA_THREADS is not a number: ") + env);
    }
  }
  return flag;
}

void require_p(int k, int m, double p) {
  if (auto clause = tia::violated_p_clause(k, m, p))
    tia::raise(tia::Errc::InvalidPForKM, *clause);
}

struct AnalyzeArgs {
  std::string input;
};

int run_analyze(const AnalyzeArgs& a) {
  const tia::Tetrahedron k = tia::parse_tetrahedron_json(tia::read_text_file(a.input));
  std::cout << tia::geometry_report_to_json(tia::geometry_report(k)) << '\n';
  return kOk;
}

struct AuditArgs {
  std::string input;
  std::string format = "json";
  double threshold = tia::kDefaultSliverThreshold;
  unsigned threads = 0;
};

int run_audit(const AuditArgs& a) {
  const tia::MeshFile mesh = tia::parse_mesh_json(tia::read_text_file(a.input));
  const auto rows = tia::audit_mesh(mesh, a.threshold, thread_count(a.threads));
  if (a.format == "csv")
    std::cout << tia::audit_to_csv(rows);
  else
    std::cout << tia::audit_to_json(rows) << '\n';
  return kOk;
}

struct InterpArgs {
  std::string tet;
  std::string function;
  int k = 1;
  int m = 0;
  std::string p = "2";
};

int run_interp_error(const InterpArgs& a) {
  const double p = parse_p(a.p);
  require_p(a.k, a.m, p);
  const tia::Tetrahedron k = tia::parse_tetrahedron_json(tia::read_text_file(a.tet));
  const tia::MultiPolynomial v = tia::parse_polynomial_json(tia::read_text_file(a.function));
  const tia::ErrorRatioRecord r = tia::error_ratio(k, v, a.k, a.m, p);
  std::cout << tia::record_to_json(r) << '\n';
  return kOk;
}

struct SweepArgs {
  std::string family = "sliver";
  double alpha = 2.5;
  std::vector<double> h_grid;
  std::vector<double> b_grid;
  double a = 1.0;
  std::string which = "hat";
  double length = 1.0;
  int count = 10;
  int k = 1;
  int m = 0;
  std::string p = "2";
  std::uint64_t seed = 42;
  std::string out = "sweep.csv";
  unsigned threads = 0;
};

int run_sweep(const SweepArgs& a) {
  const double p = parse_p(a.p);
  require_p(a.k, a.m, p);

  tia::ElementFamily fam;
  if (a.family == "sliver") {
    fam.kind = tia::SliverFamily{a.alpha};
    fam.parameter_grid = a.h_grid.empty() ? std::vector<double>{0.2, 0.1, 0.05} : a.h_grid;
  } else if (a.family == "squeezed") {
    const auto which = a.which == "tilde" ? tia::ReferenceKind::tilde : tia::ReferenceKind::hat;
    fam.kind = tia::SqueezedFamily{which, a.a};
    fam.parameter_grid = a.b_grid.empty() ? std::vector<double>{1, 4, 16} : a.b_grid;
  } else if (a.family == "needle") {
    fam.kind = tia::NeedleFamily{a.length};
    fam.parameter_grid = a.h_grid.empty() ? std::vector<double>{0.5, 0.25, 0.125} : a.h_grid;
  } else {
    fam.kind = tia::RandomFamily{a.seed, a.count};
  }

  const tia::SweepResult res = tia::bound_sweep(fam, a.k, a.m, p, a.seed, thread_count(a.threads));
  std::ofstream out(a.out);
  if (!out) tia::raise(tia::Errc::ParseError, "cannot write " + a.out);
  tia::write_records_csv(out, res.records);

  std::cout << "family " << a.family << ", k=" << a.k << " m=" << a.m << " p=" << tia::format_double(p)
            << ", " << res.records.size() << " records -> " << a.out << '\n';
  std::cout << std::left << std::setw(14) << "param" << std::setw(22) << "max_ratio_projected"
            << "max_ratio_naive\n";
  for (const auto& e : res.per_element)
    std::cout << std::setw(14) << tia::format_double(e.h_param) << std::setw(22)
              << tia::format_double(e.max_ratio_projected) << tia::format_double(e.max_ratio_naive)
              << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  unsigned threads = 0;
};

int run_verify(const VerifyArgs& a) {
  const auto names = tia::suite_names();
  if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end()) {
    std::cerr << "tia: unknown suite '" << a.suite << "'\n";
    return kInputError;
  }
  tia::VerifyOptions opts;
  opts.threads = thread_count(a.threads);
  bool all_ok = true;
  for (const auto& suite : tia::run_suites(a.suite, opts)) {
    std::cout << "[" << suite.name << "]\n";
    for (const auto& prop : suite.properties) {
      std::cout << "  " << (prop.ok() ? "PASS " : "FAIL ") << std::left << std::setw(34) << prop.name
                << prop.passed << "/" << prop.total << '\n';
      if (!prop.ok()) std::cout << "       first failure: " << prop.first_failure << '\n';
    }
    all_ok = all_ok && suite.ok();
  }
  return all_ok ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation error and projected circumradius toolkit for tetrahedra"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Geometry report for one tetrahedron JSON file");
  c_analyze->add_option("input", analyze.input, "Tetrahedron JSON")->required();

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("mesh-audit", "Per-element quality table for a mesh JSON file");
  c_audit->add_option("input", audit.input, "Mesh JSON")->required();
  c_audit->add_option("--format", audit.format)->check(CLI::IsMember({"json", "csv"}));
  c_audit->add_option("--threshold", audit.threshold, "Sliver flag cut-off on R_K/h_K");
  c_audit->add_option("--threads", audit.threads);

  InterpArgs interp;
  auto* c_interp = app.add_subcommand("interp-error", "Error ratio record for one element and function");
  c_interp->add_option("--tet", interp.tet, "Tetrahedron JSON")->required();
  c_interp->add_option("--function", interp.function, "Polynomial JSON")->required();
  c_interp->add_option("--k", interp.k);
  c_interp->add_option("--m", interp.m);
  c_interp->add_option("--p", interp.p, "Exponent, or inf");

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "Error ratios over a degenerating element family");
  c_sweep->add_option("--family", sweep.family)
      ->check(CLI::IsMember({"sliver", "squeezed", "needle", "random"}));
  c_sweep->add_option("--alpha", sweep.alpha, "Sliver exponent");
  c_sweep->add_option("--h-grid", sweep.h_grid, "Sliver h values, or needle thickness")->delimiter(',');
  c_sweep->add_option("--b-grid", sweep.b_grid, "Squeeze factors b")->delimiter(',');
  c_sweep->add_option("--a", sweep.a, "Squeeze factor a");
  c_sweep->add_option("--which", sweep.which)->check(CLI::IsMember({"hat", "tilde"}));
  c_sweep->add_option("--length", sweep.length, "Needle length");
  c_sweep->add_option("--count", sweep.count, "Random family size");
  c_sweep->add_option("--k", sweep.k);
  c_sweep->add_option("--m", sweep.m);
  c_sweep->add_option("--p", sweep.p, "Exponent, or inf");
  c_sweep->add_option("--seed", sweep.seed);
  c_sweep->add_option("--out", sweep.out, "CSV output path");
  c_sweep->add_option("--threads", sweep.threads);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run property suites");
  c_verify->add_option("--suite", verify.suite, "all, geometry, interp, norms or bounds");
  c_verify->add_option("--threads", verify.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*c_analyze) return run_analyze(analyze);
    if (*c_audit) return run_audit(audit);
    if (*c_interp) return run_interp_error(interp);
    if (*c_sweep) return run_sweep(sweep);
    if (*c_verify) return run_verify(verify);
  } catch (const tia::Error& e) {
    std::cerr << "tia: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "tia: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
