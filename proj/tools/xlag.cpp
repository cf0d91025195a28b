// Command-line front end for the exceptional Laguerre pipeline.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

using namespace xlag;
using namespace xlag::cli;

struct Common {
  std::string m1 = "(|)";
  std::string m2 = "(|)";
  std::string alpha_value;
  int alpha_offset = 0;
  std::string out = "text";
};

void add_common(CLI::App* sub, Common& c, bool with_pair = true) {
  if (with_pair) {
    sub->add_option("--m1", c.m1, "first Maya diagram, e.g. \"(|3,2)\"");
    sub->add_option("--m2", c.m2, "second Maya diagram, e.g. \"(1,0|)\"");
    sub->add_option("--alpha-value", c.alpha_value, "numeric alpha as p/q (symbolic when omitted)");
    sub->add_option("--alpha-offset", c.alpha_offset, "integer k: the pipeline starts at alpha + k");
  }
  sub->add_option("--out", c.out, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

Problem problem(const Common& c) {
  Problem p;
  try {
    p.pair = {parse_diagram(c.m1), parse_diagram(c.m2)};
  } catch (const ValidationError& e) {
    throw CliError(kExitFailure, std::string("invalid diagram: ") + e.what());
  }
  p.alpha_offset = c.alpha_offset;
  if (!c.alpha_value.empty()) p.alpha_value = parse_alpha(c.alpha_value);
  return p;
}

void emit(const Common& c, const nlohmann::json& j, const std::string& text) {
  if (c.out == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional Laguerre operators from Maya diagram pairs"};
  app.require_subcommand(1);

  Common analyze_opts;
  std::string convention = "paper";
  auto* analyze = app.add_subcommand("analyze", "shift constants, weight, m-functions and spectra");
  add_common(analyze, analyze_opts);
  analyze->add_option("--convention", convention, "pole convention")->check(CLI::IsMember({"paper", "strict", "both"}));

  Common oracle_opts;
  int max_index = 3, trunc = 0;
  bool perturb = false;
  auto* oracle = app.add_subcommand("oracle-check", "closed forms against the brute-force Wronskian oracle");
  add_common(oracle, oracle_opts, false);
  oracle->add_option("--max-index", max_index, "all index lists are subsets of {0..K-1}")->check(CLI::Range(0, 6));
  oracle->add_option("--trunc", trunc, "starting series truncation order");
  oracle->add_flag("--perturb", perturb, "multiply every closed form by 2 (negative control)");

  Common spectrum_opts;
  std::string tau_text = "0", window_text = "-5,10";
  auto* spec = app.add_subcommand("spectrum", "eigenvalues of L_tau as solutions of M_inf(lambda) = tau");
  add_common(spec, spectrum_opts);
  spec->add_option("--tau", tau_text, "real tau, or inf for the symbolic L_inf spectrum");
  spec->add_option("--window", window_text, "lambda window lo,hi");

  Common plot_opts;
  int grid = 601;
  std::string plot_window = "-3,3";
  auto* plot = app.add_subcommand("plot-data", "CSV samples of M_inf on a lambda grid");
  add_common(plot, plot_opts);
  plot->add_option("--grid", grid, "number of grid points");
  plot->add_option("--window", plot_window, "lambda window lo,hi");

  Common polys_opts;
  int count = 3;
  auto* polys = app.add_subcommand("polys", "first non-deleted exceptional polynomials");
  add_common(polys, polys_opts);
  polys->add_option("--count", count, "number of polynomials")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) {
      const auto r = analysis_report(problem(analyze_opts), parse_convention(convention));
      emit(analyze_opts, r, render_analysis_text(r));
    } else if (*oracle) {
      const auto r = oracle_check_report(max_index, trunc, perturb);
      emit(oracle_opts, r, render_oracle_check_text(r));
      return r.at("mismatches").get<int>() == 0 ? kExitOk : kExitFailure;
    } else if (*spec) {
      std::optional<double> tau;
      if (tau_text != "inf") {
        try {
          tau = std::stod(tau_text);
        } catch (const std::exception&) {
          throw CliError(kExitFailure, "cannot parse tau '" + tau_text + "'");
        }
      }
      const auto [lo, hi] = parse_window(window_text);
      const auto r = spectrum_report(problem(spectrum_opts), tau, lo, hi);
      emit(spectrum_opts, r, render_spectrum_text(r));
    } else if (*plot) {
      const auto [lo, hi] = parse_window(plot_window);
      std::cout << plot_csv(problem(plot_opts), grid, lo, hi);
    } else if (*polys) {
      const auto r = polys_report(problem(polys_opts), count);
      emit(polys_opts, r, render_polys_text(r));
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
