// fpme: solver and analysis front end for the self-similar Volterra form of
// the time-fractional porous medium equation.
//
// Exit codes: 0 success, 1 numerical failure, 2 validation/usage error,
// 3 degenerate order estimate.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpme/analysis.hpp"
#include "fpme/errors.hpp"
#include "fpme/io.hpp"
#include "fpme/kernel.hpp"
#include "fpme/reconstruct.hpp"
#include "fpme/solver.hpp"
#include "fpme/theory.hpp"

namespace {

using namespace fpme;

constexpr int kOk = 0;
constexpr int kNumericalFailure = 1;
constexpr int kValidationError = 2;
constexpr int kDegenerateEstimate = 3;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + path);
  os << text;
  if (!os) throw std::runtime_error("failed writing " + path);
}

// Writes to the file when a path is set, otherwise to stdout; returns true
// when the payload went to stdout (the summary then moves to stderr).
bool emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  write_text(out_path, text);
  return false;
}

struct SweepSpec {
  std::vector<ProblemParams> cells;
  std::optional<int> n_base;
  std::optional<double> X;
};

// Flat key-value sweep description: `cell = alpha,m` (repeatable) plus
// optional `n_base = ...` and `x = ...`. '#' starts a comment.
SweepSpec parse_sweep_spec(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::domain_error("cannot open spec file " + path);
  SweepSpec spec;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::domain_error(path + ":" + std::to_string(lineno) + ": " + what);
  };
  auto parse_double = [&](const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      fail("bad number '" + text + "'");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) fail("trailing characters in number '" + text + "'");
    return v;
  };
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "cell") {
      const auto comma = value.find(',');
      if (comma == std::string::npos) fail("cell needs alpha,m");
      spec.cells.push_back({parse_double(trim(value.substr(0, comma))),
                            parse_double(trim(value.substr(comma + 1)))});
    } else if (key == "n_base") {
      spec.n_base = static_cast<int>(parse_double(value));
    } else if (key == "x") {
      spec.X = parse_double(value);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return spec;
}

std::string bounds_text(const ProblemParams& params, double X) {
  const auto bounds = theory::bounds_coefficients(params);
  const auto kb = theory::make_kernel_bound(params, X);
  const auto adm = theory::midpoint_admissible(params, kb);
  const double order = theory::theoretical_order(params, kb);
  std::ostringstream os;
  os << "C1 = " << io::format_full(bounds.C1) << '\n'
     << "C2 = " << io::format_full(bounds.C2) << '\n'
     << "kappa = " << io::format_full(bounds.kappa) << '\n'
     << "X = " << io::format_full(X) << '\n'
     << "D = " << io::format_full(kb.D) << '\n'
     << "A = " << io::format_full(adm.A) << '\n'
     << "threshold = " << io::format_full(adm.threshold) << '\n'
     << "theoretical_order = " << io::format_full(order) << '\n'
     << "admissible = " << (adm.admissible ? "true" : "false") << '\n';
  return os.str();
}

std::string bounds_json(const ProblemParams& params, double X) {
  const auto bounds = theory::bounds_coefficients(params);
  const auto kb = theory::make_kernel_bound(params, X);
  const auto adm = theory::midpoint_admissible(params, kb);
  nlohmann::json obj;
  obj["alpha"] = params.alpha;
  obj["m"] = params.m;
  obj["C1"] = bounds.C1;
  obj["C2"] = bounds.C2;
  obj["kappa"] = bounds.kappa;
  obj["X"] = X;
  obj["D"] = kb.D;
  obj["A"] = adm.A;
  obj["threshold"] = adm.threshold;
  obj["theoretical_order"] = theory::theoretical_order(params, kb);
  obj["admissible"] = adm.admissible;
  return obj.dump(2) + "\n";
}

std::string order_report_json(const analysis::OrderReport& r) {
  nlohmann::json obj;
  obj["alpha"] = r.params.alpha;
  obj["m"] = r.params.m;
  obj["N_base"] = r.N_base;
  obj["evaluation_point"] = r.evaluation_point;
  obj["empirical_order"] = r.empirical_order;
  obj["theoretical_order_computed"] = r.theoretical_order;
  const auto ref = analysis::reference_lookup(r.params);
  obj["theoretical_order_paper"] =
      ref ? nlohmann::json(ref->theoretical) : nlohmann::json(nullptr);
  obj["runtime_seconds"] = r.runtime_seconds;
  return obj.dump(2) + "\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "Solver for the nonlinear Volterra equation of self-similar "
      "time-fractional porous medium flow"};
  app.require_subcommand(1);

  // solve -------------------------------------------------------------------
  double alpha = 0.5, m = 2.0;
  int n = 0;
  std::string out_path, format = "csv";
  auto* solve = app.add_subcommand("solve", "Run the midpoint scheme");
  solve->add_option("--alpha", alpha, "fractional order, 0 < alpha < 1")
      ->required();
  solve->add_option("--m", m, "nonlinearity exponent, m >= 1")->required();
  solve->add_option("--n", n, "number of grid subdivisions, N >= 4")
      ->required();
  solve->add_option("--out", out_path, "output file (default: stdout)");
  solve->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // order -------------------------------------------------------------------
  int n_base = 3000;
  double point = 1.0, cutoff = 0.0;
  auto* order = app.add_subcommand("order", "Three-grid convergence order");
  order->add_option("--alpha", alpha, "fractional order")->required();
  order->add_option("--m", m, "nonlinearity exponent")->required();
  order->add_option("--n-base", n_base, "coarsest grid size")->required();
  order->add_option("--point", point, "evaluation node (default 1.0)");
  order->add_option("--x", cutoff, "cutoff X for the theoretical order");
  order->add_option("--out", out_path, "output file");
  order->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // table -------------------------------------------------------------------
  std::string spec_path;
  int threads = 1;
  auto* table = app.add_subcommand(
      "table", "Order sweep over many (alpha, m) cells");
  table->add_option("--spec", spec_path,
                    "sweep spec file (cell = alpha,m; n_base; x)");
  table->add_option("--n-base", n_base, "coarsest grid size (default 3000)");
  table->add_option("--point", point, "evaluation node");
  table->add_option("--x", cutoff, "cutoff X");
  table->add_option("--threads", threads, "max concurrent cells");
  table->add_option("--out", out_path, "output file");
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // kernel ------------------------------------------------------------------
  double z = 0.0, u = 0.0;
  bool with_oracle = false;
  auto* kern = app.add_subcommand("kernel", "Evaluate the Volterra kernel");
  kern->add_option("--alpha", alpha, "fractional order")->required();
  kern->add_option("--m", m, "nonlinearity exponent")->required();
  kern->add_option("--z", z, "outer variable in [0,1]")->required();
  kern->add_option("--u", u, "inner variable in [0,z]")->required();
  kern->add_flag("--oracle", with_oracle,
                 "also evaluate the quadrature form and report the deviation");

  // bounds ------------------------------------------------------------------
  auto* bounds = app.add_subcommand(
      "bounds", "Report C1, C2, D, A, theoretical order, admissibility");
  bounds->add_option("--alpha", alpha, "fractional order")->required();
  bounds->add_option("--m", m, "nonlinearity exponent")->required();
  bounds->add_option("--x", cutoff, "cutoff X in [0,1)");
  bounds->add_option("--out", out_path, "output file");
  bounds->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  // reconstruct -------------------------------------------------------------
  std::vector<std::string> at;
  std::string field_out;
  auto* recon = app.add_subcommand(
      "reconstruct", "Wetting front and self-similar profile");
  recon->add_option("--alpha", alpha, "fractional order")->required();
  recon->add_option("--m", m, "nonlinearity exponent")->required();
  recon->add_option("--n", n, "grid subdivisions")->required();
  recon->add_option("--out", out_path, "profile output file");
  recon->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  recon->add_option("--at", at, "sample u at x,t (repeatable)");
  recon->add_option("--field-out", field_out, "x,t,u samples output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidationError;
  }

  if (solve->parsed()) {
    const auto sol = solver::solve_midpoint({alpha, m}, n);
    const bool to_stdout =
        emit(out_path, format == "json" ? io::solution_json(sol)
                                        : io::solution_csv(sol));
    std::ostream& info = to_stdout ? std::cerr : std::cout;
    info << "y(1) = " << io::format_full(sol.values.back()) << "  eta_star = "
         << io::format_full(reconstruct::wetting_front(sol)) << '\n';
    return kOk;
  }

  if (order->parsed()) {
    analysis::StudyConfig config;
    config.n_base = n_base;
    config.evaluation_point = point;
    config.X = cutoff;
    const auto report = analysis::empirical_order_study({alpha, m}, config);
    const std::string payload = format == "json"
                                    ? order_report_json(report)
                                    : io::reports_csv({report});
    const bool to_stdout = emit(out_path, payload);
    std::ostream& info = to_stdout ? std::cerr : std::cout;
    info << "empirical = " << io::format_full(report.empirical_order)
         << "  theoretical = " << io::format_full(report.theoretical_order)
         << '\n';
    return kOk;
  }

  if (table->parsed()) {
    std::vector<ProblemParams> cells;
    analysis::StudyConfig config;
    config.n_base = n_base;
    config.evaluation_point = point;
    config.X = cutoff;
    if (!spec_path.empty()) {
      const auto spec = parse_sweep_spec(spec_path);
      cells = spec.cells;
      if (spec.n_base && !table->count("--n-base")) config.n_base = *spec.n_base;
      if (spec.X && !table->count("--x")) config.X = *spec.X;
      if (cells.empty()) throw std::domain_error(spec_path + ": no cells");
    } else {
      cells = analysis::standard_cells();
    }
    const auto reports = analysis::table_harness(cells, config, threads);
    std::size_t failed = 0;
    for (const auto& r : reports) {
      if (!r.error.empty()) ++failed;
    }
    const std::string payload = format == "json"
                                    ? io::reports_json(reports)
                                    : io::reports_csv(reports);
    const bool to_stdout = emit(out_path, payload);
    std::ostream& info = to_stdout ? std::cerr : std::cout;
    info << reports.size() - failed << "/" << reports.size()
         << " cells completed\n";
    if (failed > 0) {
      for (const auto& r : reports) {
        if (!r.error.empty()) {
          std::cerr << "cell (" << r.params.alpha << ", " << r.params.m
                    << "): " << r.error << '\n';
        }
      }
    }
    return failed == reports.size() ? kNumericalFailure : kOk;
  }

  if (kern->parsed()) {
    const ProblemParams params{alpha, m};
    const double value = kernel::kernel_eval(params, z, u);
    std::cout << "K = " << io::format_full(value) << '\n';
    if (with_oracle) {
      const double oracle = kernel::kernel_eval_quadrature(params, z, u);
      const double dev =
          std::fabs(value - oracle) / std::max(std::fabs(oracle), 1e-12);
      std::cout << "oracle = " << io::format_full(oracle) << '\n'
                << "rel_dev = " << io::format_full(dev) << '\n';
    }
    return kOk;
  }

  if (bounds->parsed()) {
    validate(ProblemParams{alpha, m});
    const std::string payload = format == "json"
                                    ? bounds_json({alpha, m}, cutoff)
                                    : bounds_text({alpha, m}, cutoff);
    emit(out_path, payload);
    return kOk;
  }

  if (recon->parsed()) {
    const auto sol = solver::solve_midpoint({alpha, m}, n);
    const auto prof = reconstruct::profile(sol);
    const bool to_stdout =
        emit(out_path, format == "json" ? io::profile_json(prof)
                                        : io::profile_csv(prof));
    std::ostream& info = to_stdout ? std::cerr : std::cout;
    info << "eta_star = " << io::format_full(prof.eta_star) << '\n';
    std::vector<io::FieldSample> samples;
    for (const auto& pair : at) {
      const auto comma = pair.find(',');
      if (comma == std::string::npos) {
        throw std::domain_error("--at expects x,t, got '" + pair + "'");
      }
      io::FieldSample s;
      try {
        s.x = std::stod(pair.substr(0, comma));
        s.t = std::stod(pair.substr(comma + 1));
      } catch (const std::exception&) {
        throw std::domain_error("--at expects numbers x,t, got '" + pair + "'");
      }
      s.u = reconstruct::evaluate_u(prof, s.x, s.t);
      samples.push_back(s);
      info << "u(" << io::format_full(s.x) << ", " << io::format_full(s.t)
           << ") = " << io::format_full(s.u) << '\n';
    }
    if (!field_out.empty()) {
      write_text(field_out, io::field_csv(samples));
    }
    return kOk;
  }

  return kValidationError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const degenerate_differences_error& e) {
    std::cerr << "degenerate order estimate: " << e.what() << '\n';
    return kDegenerateEstimate;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}
