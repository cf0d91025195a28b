#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "xlag/exact/sturm.hpp"
#include "xlag/oracle.hpp"
#include "xlag/sweep.hpp"

namespace xlag::cli {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  return fmt::format("{}", v);
}

Rational parse_alpha(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw CliError(kExitFailure, "cannot parse alpha value '" + text + "' (expected p/q): " + e.what());
  }
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CliError(kExitFailure, "window must be 'lo,hi', got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const double lo = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const double hi = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CliError(kExitFailure, "window must be 'lo,hi', got '" + text + "'");
  }
}

void require_admissible(const Pipeline& p) {
  if (!is_even(p.first.mu))
    throw CliError(kExitInadmissible, "inadmissible pair " + p.pair.to_string() + ": mu = " + p.first.mu.to_string() +
                                          " is not even");
}

Rational bold_alpha_value(const Pipeline& p, const Rational& alpha_value) {
  return p.bold_alpha.c0 + p.bold_alpha.ca * alpha_value;
}

void require_domain(const Pipeline& p, const Rational& alpha_value) {
  const Rational b = bold_alpha_value(p, alpha_value);
  if (b <= -1)
    throw CliError(kExitDomain, "parameter domain violation: bold alpha = " + to_string(b) + " <= -1 at alpha = " +
                                    to_string(alpha_value));
}

ConventionChoice parse_convention(const std::string& s) {
  if (s == "paper") return ConventionChoice::paper;
  if (s == "strict") return ConventionChoice::strict;
  if (s == "both") return ConventionChoice::both;
  throw CliError(kExitFailure, "unknown convention '" + s + "'");
}

namespace {

json spectra_json(const Pipeline& p, PoleConvention c, const std::optional<Rational>& alpha_value) {
  const Spectrum s0 = spectrum(p, Extension::zero, c);
  const Spectrum si = spectrum(p, Extension::infinity, c);
  json j = {{"zero", s0.to_string()}, {"infinity", si.to_string()}, {"disjoint", disjoint(s0, si)}};
  if (alpha_value) {
    const double a = to_double(*alpha_value);
    auto values = [&](const Spectrum& s) {
      json arr = json::array();
      for (double v : s.in_window(a, -10, 10)) arr.push_back(format_double(v));
      return arr;
    };
    j["zero_values"] = values(s0);
    j["infinity_values"] = values(si);
    try {
      j["friedrichs"] = to_string(identify_friedrichs(s0, si, a));
    } catch (const std::domain_error& e) {
      j["friedrichs"] = std::string("undetermined: ") + e.what();
    }
  }
  return j;
}

std::string diff_points(const Spectrum& a, const Spectrum& b) {
  // Elements of a that b lacks. Families of a with no counterpart class in b are
  // reported whole; otherwise the first members are compared individually.
  constexpr long kScan = 32;
  std::vector<std::string> out;
  for (const auto& p : a.points)
    if (!b.contains(p)) out.push_back(p.to_string());
  for (const auto& f : a.families) {
    bool counterpart = false;
    for (const auto& g : b.families) counterpart = counterpart || (f.offset.s == g.offset.s && is_integer(f.offset.q - g.offset.q));
    if (!counterpart) {
      out.push_back(Spectrum{{f}, {}}.to_string());
      continue;
    }
    for (long n = 0; n < kScan; ++n) {
      const AffinePoint p{f.offset.q + n, f.offset.s};
      if (!f.excluded.count(n) && !b.contains(p)) out.push_back(p.to_string());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::string s = "{";
  for (std::size_t i = 0; i < out.size(); ++i) s += (i ? ", " : "") + out[i];
  return s + "}";
}

}  // namespace

json analysis_report(const Problem& prob, ConventionChoice conv) {
  const Pipeline p = make_pipeline(prob.pair, prob.start());
  require_admissible(p);
  if (prob.alpha_value) require_domain(p, *prob.alpha_value);

  json r;
  r["schema"] = "xlag.analysis/1";
  r["inputs"] = {{"m1", prob.pair.m1.to_string()},
                 {"m2", prob.pair.m2.to_string()},
                 {"start_parameter", prob.start().to_string()},
                 {"alpha", prob.alpha_value ? to_string(*prob.alpha_value) : std::string("symbolic")},
                 {"convention", conv == ConventionChoice::paper    ? "paper"
                                : conv == ConventionChoice::strict ? "strict"
                                                                   : "both"}};
  r["shifts"] = {{"t1", p.first.t1},
                 {"t2", p.first.t2},
                 {"t1p", p.second.t1p},
                 {"t2p", p.second.t2p},
                 {"mu", p.first.mu.to_string()},
                 {"nu", p.first.nu.to_string()},
                 {"mup", p.second.mup.to_string()},
                 {"nup", p.second.nup.to_string()},
                 {"C1", p.first.C1.to_string()},
                 {"C2", p.first.C2.to_string()},
                 {"C3", p.first.C3.to_string()},
                 {"D1", p.second.D1.to_string()},
                 {"D2", p.second.D2.to_string()},
                 {"D3", p.second.D3.to_string()},
                 {"alpha_prime", p.alpha_prime.to_string()},
                 {"alpha_second", p.alpha_second.to_string()}};
  r["zero_evaluations"] = {{"first_kind", p.E1.to_string()},
                           {"second_kind", p.E2.to_string()},
                           {"omega_at_zero", p.omega0.to_string()}};
  r["bold_alpha"] = p.bold_alpha.to_string();
  r["admissible"] = true;

  json endpoint = {{"infinity", "limit-point"}};
  if (prob.alpha_value) {
    const Rational b = bold_alpha_value(p, *prob.alpha_value);
    r["bold_alpha_value"] = to_string(b);
    endpoint["zero"] = (b > -1 && b < 1) ? "limit-circle" : "limit-point";
  } else {
    endpoint["zero"] = "limit-circle for -1 < " + p.bold_alpha.to_string() + " < 1";
  }
  r["endpoint"] = endpoint;

  json warnings = json::array();
  warnings.push_back("constants and m-functions are determined up to sign and a positive lambda-independent factor");
  try {
    const Weight w = weight(prob.pair, prob.start());
    r["weight"] = w.rendered;
    const NormalizationPair n = normalization(p);
    r["frakC"] = n.frakC.to_string();
    r["frakD"] = n.frakD.to_string();
    r["m_infinity"] = m_infinity(p).to_string();
    r["m_zero"] = m_zero(p).to_string();
    r["m_tau"] = m_tau_render(m_infinity(p), "tau");
  } catch (const std::domain_error& e) {
    throw CliError(kExitDomain, e.what());
  }

  if (prob.alpha_value) {
    const Rational a = *prob.alpha_value + Rational(prob.alpha_offset);
    if (is_integer(*prob.alpha_value)) warnings.push_back("integer alpha is non-generic: spectral families may collide");
    const UPoly om = omega_polynomial(prob.pair, a);
    const bool zero_free = !om.is_zero() && count_roots_from(om, Rational(0)) == 0;
    r["omega_zero_free"] = zero_free;
    if (!zero_free) warnings.push_back("Omega has a root in [0, inf) at this alpha; the weight is not integrable");
  }

  json spectra;
  if (conv != ConventionChoice::strict) spectra["paper"] = spectra_json(p, PoleConvention::paper, prob.alpha_value);
  if (conv != ConventionChoice::paper) spectra["strict"] = spectra_json(p, PoleConvention::strict, prob.alpha_value);
  r["spectra"] = spectra;
  if (conv == ConventionChoice::both) {
    json diff;
    for (Extension e : {Extension::zero, Extension::infinity}) {
      const Spectrum sp = spectrum(p, e, PoleConvention::paper);
      const Spectrum ss = spectrum(p, e, PoleConvention::strict);
      diff[to_string(e)] = {{"paper_only", diff_points(sp, ss)}, {"strict_only", diff_points(ss, sp)}};
    }
    r["convention_diff"] = diff;
  }
  r["warnings"] = warnings;
  return r;
}

namespace {

void line(std::ostringstream& os, const std::string& key, const json& v) {
  os << fmt::format("{:<22}", key) << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

std::string render_analysis_text(const json& r) {
  std::ostringstream os;
  const auto& in = r.at("inputs");
  os << "pair " << in.at("m1").get<std::string>() << " " << in.at("m2").get<std::string>() << ", start parameter "
     << in.at("start_parameter").get<std::string>() << ", alpha " << in.at("alpha").get<std::string>() << "\n\n";
  os << "[shifts]\n";
  for (const char* k : {"t1", "t2", "t1p", "t2p", "mu", "nu", "mup", "nup", "C1", "C2", "C3", "D1", "D2", "D3",
                        "alpha_prime", "alpha_second"})
    line(os, k, r.at("shifts").at(k));
  os << "\n[zero evaluations]\n";
  for (const auto& [k, v] : r.at("zero_evaluations").items()) line(os, k, v);
  os << "\n[operator]\n";
  line(os, "bold_alpha", r.at("bold_alpha"));
  if (r.contains("bold_alpha_value")) line(os, "bold_alpha_value", r.at("bold_alpha_value"));
  line(os, "endpoint zero", r.at("endpoint").at("zero"));
  line(os, "endpoint infinity", r.at("endpoint").at("infinity"));
  line(os, "weight", r.at("weight"));
  if (r.contains("omega_zero_free")) line(os, "omega_zero_free", r.at("omega_zero_free"));
  os << "\n[m-functions]\n";
  for (const char* k : {"frakC", "frakD", "m_infinity", "m_zero", "m_tau"}) line(os, k, r.at(k));
  for (const auto& [conv, s] : r.at("spectra").items()) {
    os << "\n[spectra, " << conv << " convention]\n";
    line(os, "sigma(L_0)", s.at("zero"));
    line(os, "sigma(L_inf)", s.at("infinity"));
    line(os, "disjoint", s.at("disjoint"));
    if (s.contains("zero_values")) {
      line(os, "L_0 in [-10,10]", s.at("zero_values"));
      line(os, "L_inf in [-10,10]", s.at("infinity_values"));
      line(os, "friedrichs", s.at("friedrichs"));
    }
  }
  if (r.contains("convention_diff")) {
    os << "\n[convention diff]\n";
    for (const auto& [e, d] : r.at("convention_diff").items()) {
      line(os, e + " paper only", d.at("paper_only"));
      line(os, e + " strict only", d.at("strict_only"));
    }
  }
  os << "\n[warnings]\n";
  for (const auto& w : r.at("warnings")) os << "- " << w.get<std::string>() << "\n";
  return os.str();
}

json spectrum_report(const Problem& prob, std::optional<double> tau, double lo, double hi) {
  if (!prob.alpha_value) throw CliError(kExitFailure, "spectrum requires --alpha-value");
  const Pipeline p = make_pipeline(prob.pair, prob.start());
  require_admissible(p);
  require_domain(p, *prob.alpha_value);
  const double a = to_double(*prob.alpha_value);
  json r;
  r["schema"] = "xlag.spectrum/1";
  r["inputs"] = {{"m1", prob.pair.m1.to_string()},
                 {"m2", prob.pair.m2.to_string()},
                 {"start_parameter", prob.start().to_string()},
                 {"alpha", to_string(*prob.alpha_value)},
                 {"tau", tau ? format_double(*tau) : std::string("inf")},
                 {"window", {format_double(lo), format_double(hi)}}};
  if (!tau) {
    const Spectrum s = spectrum(p, Extension::infinity);
    r["symbolic"] = s.to_string();
    json vals = json::array();
    for (double v : s.in_window(a, lo, hi)) vals.push_back({{"lambda", format_double(v)}, {"residual", "0"}});
    r["eigenvalues"] = vals;
    return r;
  }
  try {
    const NumericMFunction m(p, a);
    r["m_infinity_sign"] = m.sign();
    json vals = json::array();
    for (const auto& root : eigenvalues_tau_numeric(p, a, *tau, lo, hi))
      vals.push_back({{"lambda", format_double(root.lambda)}, {"residual", format_double(root.residual)}});
    r["eigenvalues"] = vals;
  } catch (const std::domain_error& e) {
    throw CliError(kExitDomain, e.what());
  } catch (const std::runtime_error& e) {
    throw CliError(kExitFailure, e.what());
  }
  r["note"] = "tau is defined up to the sign normalization of M_inf (increasing between poles)";
  return r;
}

std::string render_spectrum_text(const json& r) {
  std::ostringstream os;
  const auto& in = r.at("inputs");
  os << "pair " << in.at("m1").get<std::string>() << " " << in.at("m2").get<std::string>() << ", alpha "
     << in.at("alpha").get<std::string>() << ", tau " << in.at("tau").get<std::string>() << "\n";
  if (r.contains("symbolic")) os << "sigma(L_inf) = " << r.at("symbolic").get<std::string>() << "\n";
  os << fmt::format("{:<26}{}\n", "lambda", "residual");
  for (const auto& e : r.at("eigenvalues"))
    os << fmt::format("{:<26}{}\n", e.at("lambda").get<std::string>(), e.at("residual").get<std::string>());
  return os.str();
}

std::string plot_csv(const Problem& prob, int grid, double lo, double hi) {
  if (!prob.alpha_value) throw CliError(kExitFailure, "plot-data requires --alpha-value");
  const Pipeline p = make_pipeline(prob.pair, prob.start());
  require_admissible(p);
  require_domain(p, *prob.alpha_value);
  const double a = to_double(*prob.alpha_value);
  const FactoredMeromorphic m = m_infinity(p);
  std::ostringstream os;
  os << "lambda,m_infinity\n";
  if (grid <= 0 || !(lo <= hi)) return os.str();
  std::vector<double> poles_at = spectrum(p, Extension::infinity, PoleConvention::paper).in_window(a, lo - 1, hi + 1);
  for (double v : spectrum(p, Extension::infinity, PoleConvention::strict).in_window(a, lo - 1, hi + 1))
    poles_at.push_back(v);
  constexpr double kExclusion = 1e-6;
  for (int i = 0; i < grid; ++i) {
    const double l = grid == 1 ? lo : lo + (hi - lo) * i / (grid - 1);
    bool near = false;
    for (double q : poles_at) near = near || std::abs(l - q) < kExclusion;
    double v = std::numeric_limits<double>::quiet_NaN();
    if (!near) {
      v = m.eval(a, l);
      if (!std::isfinite(v)) v = std::numeric_limits<double>::quiet_NaN();
    }
    os << format_double(l) << "," << format_double(v) << "\n";
  }
  return os.str();
}

json polys_report(const Problem& prob, int count) {
  const Pipeline p = make_pipeline(prob.pair, prob.start());
  require_admissible(p);
  if (prob.alpha_value) require_domain(p, *prob.alpha_value);
  json r;
  r["schema"] = "xlag.polys/1";
  r["inputs"] = {{"m1", prob.pair.m1.to_string()},
                 {"m2", prob.pair.m2.to_string()},
                 {"start_parameter", prob.start().to_string()},
                 {"alpha", prob.alpha_value ? to_string(*prob.alpha_value) : std::string("symbolic")},
                 {"count", count}};
  json list = json::array();
  json deleted = json::array();
  for (int n = 0; static_cast<int>(list.size()) < count; ++n) {
    if (n > count + 64) throw CliError(kExitFailure, "too many deleted states");
    json coeffs = json::array();
    if (prob.alpha_value) {
      const UPoly q = exceptional_polynomial(prob.pair, *prob.alpha_value + Rational(prob.alpha_offset), n);
      for (const auto& c : q.coeffs()) coeffs.push_back(to_string(c));
    } else {
      for (const auto& c : exceptional_polynomial_symbolic(prob.pair, prob.alpha_offset, n))
        coeffs.push_back(c.to_string());
    }
    if (coeffs.empty()) {
      deleted.push_back(n);
      continue;
    }
    list.push_back({{"lambda", n}, {"degree", static_cast<int>(coeffs.size()) - 1}, {"coefficients", coeffs}});
  }
  r["polynomials"] = list;
  r["deleted"] = deleted;
  return r;
}

std::string render_polys_text(const json& r) {
  std::ostringstream os;
  for (const auto& e : r.at("polynomials")) {
    os << "lambda=" << e.at("lambda").get<int>() << " degree=" << e.at("degree").get<int>() << ":";
    int k = 0;
    bool first = true;
    for (const auto& c : e.at("coefficients")) {
      if (c.get<std::string>() != "0") {
        os << (first ? " " : " + ") << "(" << c.get<std::string>() << ")x^" << k;
        first = false;
      }
      ++k;
    }
    os << "\n";
  }
  if (!r.at("deleted").empty()) os << "deleted lambda values: " << r.at("deleted").dump() << "\n";
  return os.str();
}

json oracle_check_report(int max_index, int trunc, bool perturb) {
  SweepOptions o;
  o.max_index = max_index;
  o.trunc = trunc;
  if (perturb) o.perturbation = ProductForm(2);
  const SweepResult s = oracle_sweep(o);
  json r;
  r["schema"] = "xlag.oracle_check/1";
  r["inputs"] = {{"max_index", max_index}, {"trunc", trunc}, {"perturb", perturb}};
  r["pairs"] = s.pairs;
  r["admissible"] = s.admissible;
  r["identities"] = s.identities;
  r["mismatches"] = static_cast<int>(s.mismatches.size());
  if (!s.mismatches.empty()) {
    const auto& m = s.mismatches.front();
    r["counterexample"] = {{"m1", m.pair.m1.to_string()},
                           {"m2", m.pair.m2.to_string()},
                           {"kind", to_string(m.kind)},
                           {"closed_form", m.closed_form}};
  }
  return r;
}

std::string render_oracle_check_text(const json& r) {
  std::ostringstream os;
  os << fmt::format("{:<12}{:>10}\n", "pairs", r.at("pairs").get<int>());
  os << fmt::format("{:<12}{:>10}\n", "admissible", r.at("admissible").get<int>());
  os << fmt::format("{:<12}{:>10}\n", "identities", r.at("identities").get<int>());
  os << fmt::format("{:<12}{:>10}\n", "mismatches", r.at("mismatches").get<int>());
  if (r.contains("counterexample")) {
    const auto& c = r.at("counterexample");
    os << "smallest counterexample: " << c.at("m1").get<std::string>() << " " << c.at("m2").get<std::string>() << " ("
       << c.at("kind").get<std::string>() << "), closed form " << c.at("closed_form").get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace xlag::cli
