#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "xlag/exact/rational.hpp"
#include "xlag/maya.hpp"
#include "xlag/spectral.hpp"

namespace xlag::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInadmissible = 2;
inline constexpr int kExitDomain = 3;

// Carries an exit code to main.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Problem {
  DiagramPair pair;
  int alpha_offset = 0;               // the pipeline starts at alpha + alpha_offset
  std::optional<Rational> alpha_value;  // value of the symbol alpha
  LinearForm start() const { return LinearForm::alpha(Rational(alpha_offset)); }
};

// Parses "p/q" (or an integer) for alpha.
Rational parse_alpha(const std::string& text);
std::pair<double, double> parse_window(const std::string& text);

// Throws CliError(kExitInadmissible) for odd mu.
void require_admissible(const Pipeline& p);
// Throws CliError(kExitDomain) unless bold alpha > -1 at the numeric alpha.
void require_domain(const Pipeline& p, const Rational& alpha_value);
Rational bold_alpha_value(const Pipeline& p, const Rational& alpha_value);

enum class ConventionChoice { paper, strict, both };
ConventionChoice parse_convention(const std::string& s);

nlohmann::json analysis_report(const Problem& prob, ConventionChoice conv);
std::string render_analysis_text(const nlohmann::json& report);

nlohmann::json spectrum_report(const Problem& prob, std::optional<double> tau, double lo, double hi);
std::string render_spectrum_text(const nlohmann::json& report);

// CSV of lambda,m_infinity on an evenly spaced grid; NaN within 1e-6 of a pole.
std::string plot_csv(const Problem& prob, int grid, double lo, double hi);

nlohmann::json polys_report(const Problem& prob, int count);
std::string render_polys_text(const nlohmann::json& report);

nlohmann::json oracle_check_report(int max_index, int trunc, bool perturb);
std::string render_oracle_check_text(const nlohmann::json& report);

// Locale-independent shortest round-trip rendering of a double.
std::string format_double(double v);

}  // namespace xlag::cli
