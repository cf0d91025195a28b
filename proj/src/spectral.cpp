#include "xlag/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "xlag/evalzero.hpp"
#include "xlag/exact/sturm.hpp"
#include "xlag/oracle.hpp"

namespace xlag {

// ---------------------------------------------------------------------------
// Affine points.

double AffinePoint::eval(double alpha) const { return to_double(q) + to_double(s) * alpha; }

std::string AffinePoint::to_string() const {
  LinearForm f{q, s, 0};
  return f.to_string();
}

AffinePoint root_of(const LinearForm& f) {
  if (f.cl == 0) throw std::invalid_argument("root_of: form does not contain lambda");
  return {-f.c0 / f.cl, -f.ca / f.cl};
}

std::optional<long> integer_offset(const AffinePoint& base, const AffinePoint& p) {
  if (p.s != base.s) return std::nullopt;
  const Rational d = p.q - base.q;
  if (!is_integer(d) || d < 0) return std::nullopt;
  return d.get_num().get_si();
}

// ---------------------------------------------------------------------------
// Factored meromorphic functions.

namespace {

void add_gamma(std::map<LinearForm, int>& g, const LinearForm& arg, int e) {
  if (e == 0) return;
  auto it = g.find(arg);
  if (it == g.end()) {
    g.emplace(arg, e);
  } else {
    it->second += e;
    if (it->second == 0) g.erase(it);
  }
}

std::string gamma_string(const LinearForm& arg) { return "Gamma(" + arg.to_string() + ")"; }

}  // namespace

FactoredMeromorphic FactoredMeromorphic::gamma(const LinearForm& arg, int exponent) {
  if (arg.cl != 0 && arg.cl != -1) throw std::invalid_argument("gamma factor argument must be -lambda + affine(alpha)");
  FactoredMeromorphic f;
  add_gamma(f.gammas_, arg, exponent);
  return f;
}

FactoredMeromorphic FactoredMeromorphic::operator*(const FactoredMeromorphic& o) const {
  FactoredMeromorphic r = *this;
  r.rational_ *= o.rational_;
  for (const auto& [a, e] : o.gammas_) add_gamma(r.gammas_, a, e);
  r.sign_suppressed_ = sign_suppressed_ || o.sign_suppressed_;
  return r;
}

FactoredMeromorphic FactoredMeromorphic::inv() const {
  FactoredMeromorphic r;
  r.rational_ = rational_.inv();
  for (const auto& [a, e] : gammas_) r.gammas_.emplace(a, -e);
  r.sign_suppressed_ = sign_suppressed_;
  return r;
}

FactoredMeromorphic FactoredMeromorphic::operator/(const FactoredMeromorphic& o) const { return *this * o.inv(); }

FactoredMeromorphic FactoredMeromorphic::negated() const {
  FactoredMeromorphic r = *this;
  r.rational_ *= ProductForm(-1);
  return r;
}

FactoredMeromorphic FactoredMeromorphic::lambda_part() const {
  FactoredMeromorphic r(rational_.lambda_part());
  for (const auto& [a, e] : gammas_)
    if (a.cl != 0) r.gammas_.emplace(a, e);
  r.sign_suppressed_ = sign_suppressed_;
  return r;
}

double eval_double(const LinearForm& f, double alpha, double lambda) {
  return to_double(f.c0) + to_double(f.ca) * alpha + to_double(f.cl) * lambda;
}

double eval_double(const ProductForm& p, double alpha, double lambda) {
  double v = to_double(p.constant());
  for (const auto& [f, e] : p.factors()) v *= std::pow(eval_double(f, alpha, lambda), e);
  return v;
}

double FactoredMeromorphic::eval(double alpha, double lambda) const {
  double v = eval_double(rational_, alpha, lambda);
  int zeros = 0, infinities = 0;
  for (const auto& [a, e] : gammas_) {
    const double x = eval_double(a, alpha, lambda);
    if (x <= 0 && x == std::floor(x)) {
      (e < 0 ? zeros : infinities) += std::abs(e);
      continue;
    }
    v *= std::pow(gamma_numeric(x), e);
  }
  if (zeros > infinities) return 0.0;
  if (infinities > zeros) return std::numeric_limits<double>::infinity();
  if (zeros > 0) return std::numeric_limits<double>::quiet_NaN();
  return v;
}

std::string FactoredMeromorphic::to_string() const {
  std::ostringstream num, den;
  for (const auto& [a, e] : gammas_) {
    std::ostringstream t;
    t << gamma_string(a);
    if (std::abs(e) > 1) t << "^" << std::abs(e);
    (e > 0 ? num : den) << t.str();
  }
  std::string s;
  if (sign_suppressed_)
    s = "\xC2\xB1" + (rational_.constant() < 0 ? (rational_ * ProductForm(-1)).to_string() : rational_.to_string());
  else
    s = rational_.to_string();
  if (!num.str().empty()) s += " * " + num.str();
  if (!den.str().empty()) s += " / " + den.str();
  return s;
}

// ---------------------------------------------------------------------------
// Pipeline.

Pipeline make_pipeline(const DiagramPair& pair, const LinearForm& alpha) {
  Pipeline p;
  p.pair = pair;
  p.alpha = alpha;
  p.first = shift_constants_first(pair, alpha);
  p.second = shift_constants_second(pair, alpha);
  p.alpha_prime = alpha - Rational(p.first.t1 + p.first.t2);
  p.alpha_second = alpha - Rational(p.second.t1p + p.second.t2p);
  p.bold_alpha = p.alpha_prime + Rational(p.first.mu.length() + p.first.nu.length());
  p.E1 = eval_first_kind(p.first.mu, p.first.nu, p.alpha_prime, LinearForm::lambda(Rational(p.first.t1)));
  p.E2 = eval_second_kind(p.second.mup, p.second.nup, p.alpha_second, LinearForm::lambda(Rational(p.second.t1p)));
  p.omega0 = p.first.C3 * eval_plain(p.first.mu, p.first.nu, p.alpha_prime);
  return p;
}

LinearForm bold_alpha(const DiagramPair& pair, const LinearForm& alpha) {
  const int t1 = canonical_shift(pair.m1);
  const int t2 = canonical_shift(pair.m2);
  return alpha - Rational(t1 + t2) + Rational(partition_length(pair.m1, t1) + partition_length(pair.m2, t2));
}

DiagramPair type_one_pair(int m) {
  if (m < 1) throw ValidationError("Type I degree must be positive");
  return {MayaDiagram(), MayaDiagram({}, {m})};
}

OperatorData operator_data(const DiagramPair& pair, const LinearForm& alpha, std::optional<Rational> alpha_value) {
  OperatorData d;
  d.pipeline = make_pipeline(pair, alpha);
  d.admissible = is_even(d.pipeline.first.mu);
  if (alpha_value) {
    const Rational b = d.pipeline.bold_alpha.c0 + d.pipeline.bold_alpha.ca * *alpha_value;
    d.limit_circle = b > -1 && b < 1;
  }
  return d;
}

namespace {

int integer_alpha_offset(const LinearForm& alpha) {
  if (alpha.ca != 1 || alpha.cl != 0 || !is_integer(alpha.c0))
    throw std::invalid_argument("expected alpha + integer offset");
  return static_cast<int>(alpha.c0.get_num().get_si());
}

}  // namespace

Weight weight(const DiagramPair& pair, const LinearForm& alpha) {
  const Pipeline p = make_pipeline(pair, alpha);
  if (!is_even(p.first.mu)) throw ValidationError("inadmissible: mu = " + p.first.mu.to_string() + " is not even");
  if (p.omega0.is_zero()) throw std::domain_error("Omega(0) vanishes identically");
  Weight w;
  w.bold_alpha = p.bold_alpha;
  w.omega = omega_plain_symbolic(pair, integer_alpha_offset(alpha), omega_degree(pair) + 1);
  std::ostringstream os;
  os << "x^(" << p.bold_alpha.to_string() << ") e^(-x) / [";
  bool first = true;
  for (std::size_t k = w.omega.size(); k-- > 0;) {
    if (w.omega[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << w.omega[k].to_string() << ")";
    if (k > 0) os << "*x" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) os << "0";
  os << "]^2";
  w.rendered = os.str();
  return w;
}

// ---------------------------------------------------------------------------
// Normalizations and m-functions.

NormalizationPair normalization(const Pipeline& p) {
  if (p.omega0.is_zero()) throw std::domain_error("Omega(0) vanishes identically");
  const LinearForm a = p.alpha;
  const LinearForm lam = LinearForm::lambda();
  NormalizationPair n;
  n.frakC = FactoredMeromorphic(ProductForm(-1) * ProductForm::of(p.bold_alpha) * p.C() * p.E1 / p.omega0) *
            FactoredMeromorphic::gamma(-a) / FactoredMeromorphic::gamma(-lam - a);
  n.frakD = FactoredMeromorphic(ProductForm(-1) * p.D() * p.E2 / p.omega0) * FactoredMeromorphic::gamma(a) /
            FactoredMeromorphic::gamma(-lam);
  return n;
}

FactoredMeromorphic m_infinity(const Pipeline& p) {
  const NormalizationPair n = normalization(p);
  return n.frakD / n.frakC;
}

FactoredMeromorphic m_zero(const Pipeline& p) { return m_infinity(p).inv().negated(); }

double m_tau_numeric(const FactoredMeromorphic& m_inf, double tau, double alpha, double lambda) {
  const double m = m_inf.eval(alpha, lambda);
  return (1 + tau * m) / (tau - m);
}

std::string m_tau_render(const FactoredMeromorphic& m_inf, const std::string& tau) {
  const std::string m = "[" + m_inf.to_string() + "]";
  return "(1 + " + tau + " * " + m + ") / (" + tau + " - " + m + ")";
}

std::string to_string(PoleConvention c) { return c == PoleConvention::paper ? "paper" : "strict"; }
std::string to_string(Extension e) { return e == Extension::zero ? "zero" : "infinity"; }

// ---------------------------------------------------------------------------
// Spectra.

bool Spectrum::contains(const AffinePoint& p) const {
  for (const auto& f : families) {
    const auto n = integer_offset(f.offset, p);
    if (n && !f.excluded.count(*n)) return true;
  }
  return std::find(points.begin(), points.end(), p) != points.end();
}

std::optional<double> Spectrum::minimum(double alpha) const {
  std::optional<double> best;
  auto consider = [&](double v) {
    if (!best || v < *best) best = v;
  };
  for (const auto& f : families) {
    long n = 0;
    while (f.excluded.count(n)) ++n;
    consider(f.offset.eval(alpha) + static_cast<double>(n));
  }
  for (const auto& p : points) consider(p.eval(alpha));
  return best;
}

std::vector<double> Spectrum::in_window(double alpha, double lo, double hi) const {
  std::vector<double> out;
  for (const auto& f : families) {
    const double base = f.offset.eval(alpha);
    const long start = std::max<long>(0, static_cast<long>(std::ceil(lo - base)));
    for (long n = start; base + static_cast<double>(n) <= hi; ++n)
      if (!f.excluded.count(n)) out.push_back(base + static_cast<double>(n));
  }
  for (const auto& p : points) {
    const double v = p.eval(alpha);
    if (v >= lo && v <= hi) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }), out.end());
  return out;
}

std::string Spectrum::to_string() const {
  std::vector<std::string> parts;
  for (const auto& f : families) {
    std::string s = "{n";
    const std::string off = f.offset.to_string();
    if (off != "0") s += (off[0] == '-' ? " - " + off.substr(1) : " + " + off);
    s += " : n >= 0";
    if (!f.excluded.empty()) {
      s += ", n not in {";
      bool first = true;
      for (long n : f.excluded) {
        s += (first ? "" : ",") + std::to_string(n);
        first = false;
      }
      s += "}";
    }
    s += "}";
    parts.push_back(s);
  }
  if (!points.empty()) {
    std::string s = "{";
    for (std::size_t i = 0; i < points.size(); ++i) s += (i ? ", " : "") + points[i].to_string();
    parts.push_back(s + "}");
  }
  if (parts.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " U " : "") + parts[i];
  return out;
}

namespace {

struct PoleData {
  // Gamma(-lambda + c) families: base point and exponent.
  std::vector<std::pair<AffinePoint, int>> gammas;
  std::map<AffinePoint, int> roots;  // rational part: > 0 zero order, < 0 pole order
};

PoleData pole_data(const FactoredMeromorphic& f) {
  PoleData d;
  for (const auto& [arg, e] : f.gammas())
    if (arg.cl != 0) d.gammas.push_back({AffinePoint{arg.c0, arg.ca}, e});
  for (const auto& [form, e] : f.rational().factors())
    if (form.has_lambda()) d.roots[root_of(form)] += e;
  return d;
}

int order_at(const PoleData& d, const AffinePoint& p, PoleConvention c) {
  int order = 0;
  for (const auto& [base, e] : d.gammas) {
    if (!integer_offset(base, p)) continue;
    if (e > 0)
      order += e;
    else if (c == PoleConvention::strict)
      order += e;
  }
  auto it = d.roots.find(p);
  if (it != d.roots.end()) order -= it->second;
  return order;
}

bool same_class(const AffinePoint& a, const AffinePoint& b) { return a.s == b.s && is_integer(a.q - b.q); }

}  // namespace

Spectrum poles(const FactoredMeromorphic& f, PoleConvention convention) {
  const PoleData d = pole_data(f);
  Spectrum s;
  std::vector<bool> done(d.gammas.size(), false);
  for (std::size_t i = 0; i < d.gammas.size(); ++i) {
    if (done[i] || d.gammas[i].second < 0) continue;
    // Collect the class of this numerator Gamma.
    AffinePoint base = d.gammas[i].first;
    int asymptotic = 0;
    std::vector<AffinePoint> anchors;
    for (std::size_t j = 0; j < d.gammas.size(); ++j) {
      if (!same_class(d.gammas[j].first, base)) continue;
      done[j] = true;
      const auto& [b, e] = d.gammas[j];
      anchors.push_back(b);
      if (e > 0) {
        asymptotic += e;
        if (b.q < base.q) base = b;
      } else if (convention == PoleConvention::strict) {
        asymptotic += e;
      }
    }
    for (const auto& [r, e] : d.roots)
      if (same_class(r, base)) anchors.push_back(r);
    long bound = 0;
    for (const auto& a : anchors)
      if (auto n = integer_offset(base, a)) bound = std::max(bound, *n + 1);
    Family fam{base, {}};
    for (long n = 0; n < bound; ++n) {
      const AffinePoint p{base.q + n, base.s};
      if (order_at(d, p, convention) <= 0) fam.excluded.insert(n);
    }
    if (asymptotic > 0) {
      s.families.push_back(fam);
    } else {
      for (long n = 0; n < bound; ++n)
        if (!fam.excluded.count(n)) s.points.push_back({base.q + n, base.s});
    }
  }
  for (const auto& [r, e] : d.roots) {
    if (e >= 0 || s.contains(r)) continue;
    if (order_at(d, r, convention) > 0) s.points.push_back(r);
  }
  std::sort(s.families.begin(), s.families.end(),
            [](const Family& a, const Family& b) { return a.offset < b.offset; });
  std::sort(s.points.begin(), s.points.end());
  s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
  return s;
}

Spectrum spectrum(const Pipeline& p, Extension ext, PoleConvention convention) {
  return poles(ext == Extension::infinity ? m_infinity(p) : m_zero(p), convention);
}

bool disjoint(const Spectrum& a, const Spectrum& b) {
  for (const auto& fa : a.families)
    for (const auto& fb : b.families)
      if (same_class(fa.offset, fb.offset)) return false;
  for (const auto& p : a.points)
    if (b.contains(p)) return false;
  for (const auto& p : b.points)
    if (a.contains(p)) return false;
  return true;
}

Extension identify_friedrichs(const Spectrum& s0, const Spectrum& s_inf, double alpha) {
  const auto m0 = s0.minimum(alpha);
  const auto mi = s_inf.minimum(alpha);
  if (!m0 || !mi) throw std::domain_error("identify_friedrichs: empty spectrum");
  if (std::abs(*m0 - *mi) < 1e-12) throw std::domain_error("identify_friedrichs: lowest eigenvalues tie");
  return *m0 > *mi ? Extension::zero : Extension::infinity;
}

// ---------------------------------------------------------------------------
// Numerics.

double gamma_numeric(double x) {
  if (x <= 0 && x == std::floor(x)) throw std::domain_error("gamma_numeric: pole at " + std::to_string(x));
  return boost::math::tgamma(x);
}

NumericMFunction::NumericMFunction(const Pipeline& p, double alpha)
    : m_(m_infinity(p)), poles_(poles(m_, PoleConvention::strict)), alpha_(alpha) {
  // Herglotz direction: sample every gap between poles on a fixed window.
  constexpr double lo = -12, hi = 12;
  std::vector<double> cuts = poles_in(lo, hi);
  cuts.insert(cuts.begin(), lo);
  cuts.push_back(hi);
  int up = 0, down = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b - a < 1e-6) continue;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int k = 1; k <= 7; ++k) {
      const double v = m_.eval(alpha_, a + (b - a) * k / 8.0);
      if (!std::isfinite(v)) continue;
      if (std::isfinite(prev)) (v > prev ? up : down)++;
      prev = v;
    }
  }
  if (up > 0 && down > 0)
    throw std::runtime_error("M_inf is not monotone between poles (" + std::to_string(up) + " increasing, " +
                             std::to_string(down) + " decreasing samples); sign convention cannot be fixed");
  sign_ = down > 0 ? -1 : 1;
}

std::vector<double> NumericMFunction::poles_in(double lo, double hi) const { return poles_.in_window(alpha_, lo, hi); }

std::vector<LevelRoot> eigenvalues_tau_numeric(const Pipeline& p, double alpha, double tau, double lo, double hi) {
  const NumericMFunction m(p, alpha);
  std::vector<double> cuts = m.poles_in(lo, hi);
  for (double c : cuts)
    if (std::abs(c - lo) < 1e-9 || std::abs(c - hi) < 1e-9)
      throw std::domain_error("eigenvalues_tau_numeric: window endpoint sits on a pole");
  cuts.insert(cuts.begin(), lo);
  cuts.push_back(hi);
  std::vector<LevelRoot> out;
  auto g = [&](double x) { return m(x) - tau; };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const bool left_pole = i > 0, right_pole = i + 2 < cuts.size();
    double a = cuts[i], b = cuts[i + 1];
    const double width = b - a;
    if (left_pole) a += 1e-10 * std::max(1.0, width);
    if (right_pole) b -= 1e-10 * std::max(1.0, width);
    double ga = g(a), gb = g(b);
    if (!std::isfinite(ga) || !std::isfinite(gb) || (ga > 0) == (gb > 0)) continue;
    int it = 0;
    while (b - a > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a))) {
      if (++it > 400) throw std::runtime_error("eigenvalues_tau_numeric: bisection did not converge");
      const double mid = 0.5 * (a + b);
      const double gm = g(mid);
      if (gm == 0) {
        a = b = mid;
        break;
      }
      if ((gm > 0) == (ga > 0)) {
        a = mid;
        ga = gm;
      } else {
        b = mid;
      }
    }
    const double root = 0.5 * (a + b);
    out.push_back({root, std::abs(g(root))});
  }
  return out;
}

namespace {

double horner(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> to_doubles(const UPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(to_double(c));
  return out;
}

// Gram matrix of the polynomials under x^b e^{-x} / omega^2 with panel width h.
std::vector<std::vector<double>> gram(const std::vector<std::vector<double>>& polys, const std::vector<double>& omega,
                                      const Rational& b, double tail, double h) {
  using GL = boost::math::quadrature::gauss<double, 20>;
  const std::size_t k = polys.size();
  std::vector<std::vector<double>> G(k, std::vector<double>(k, 0.0));
  const double bd = to_double(b);
  auto accumulate = [&](double x, double w) {
    const double om = horner(omega, x);
    w *= std::exp(-x) / (om * om);
    std::vector<double> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = horner(polys[i], x);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) G[i][j] += w * v[i] * v[j];
  };
  const auto& xs = GL::abscissa();
  const auto& ws = GL::weights();
  auto panel = [&](double a, double c, auto&& map) {
    const double half = 0.5 * (c - a), mid = 0.5 * (c + a);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double w = ws[i] * half;
      map(mid + half * xs[i], w);
      if (xs[i] != 0) map(mid - half * xs[i], w);
    }
  };
  // [0, 1] with x = u^q, which makes x^b dx = q u^{q b + q - 1} du smooth.
  const long q = b.get_den().get_si();
  const double expo = static_cast<double>(q) * bd + static_cast<double>(q) - 1;
  for (double a = 0; a < 1 - 1e-12; a += h)
    panel(a, std::min(1.0, a + h), [&](double u, double w) {
      accumulate(std::pow(u, static_cast<double>(q)), w * static_cast<double>(q) * std::pow(u, expo));
    });
  for (double a = 1; a < tail - 1e-12; a += h)
    panel(a, std::min(tail, a + h), [&](double x, double w) { accumulate(x, w * std::pow(x, bd)); });
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j) G[i][j] = G[j][i];
  return G;
}

double worst_off_diagonal(const std::vector<std::vector<double>>& G) {
  double worst = 0;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      worst = std::max(worst, std::abs(G[i][j]) / std::sqrt(G[i][i] * G[j][j]));
  return worst;
}

}  // namespace

OrthogonalityResult orthogonality_check(const DiagramPair& pair, const Rational& alpha, int count,
                                        const LinearForm& alpha_expr) {
  const Rational a = alpha_expr.c0 + alpha_expr.ca * alpha;
  const LinearForm b_form = bold_alpha(pair, alpha_expr);
  const Rational b = b_form.c0 + b_form.ca * alpha;
  if (b <= -1) throw std::domain_error("orthogonality_check: bold alpha must exceed -1");
  const UPoly omega = omega_polynomial(pair, a);
  if (omega.is_zero() || count_roots_from(omega, Rational(0)) > 0)
    throw std::domain_error("orthogonality_check: Omega has a root in [0, inf) at alpha = " + xlag::to_string(alpha) +
                            "; the weight is not integrable");

  OrthogonalityResult res;
  std::vector<std::vector<double>> polys;
  int max_deg = 0;
  for (int n = 0; static_cast<int>(polys.size()) < count; ++n) {
    if (n > count + 64) throw std::runtime_error("orthogonality_check: too many deleted states");
    const UPoly pn = exceptional_polynomial(pair, a, n);
    if (pn.is_zero()) continue;
    res.degrees_used.push_back(n);
    polys.push_back(to_doubles(pn));
    max_deg = std::max(max_deg, pn.degree());
  }
  const std::vector<double> om = to_doubles(omega);

  // Tail: the largest integrand is below 1e-18 of its value near the peak.
  const double bd = to_double(b);
  auto envelope = [&](double x) {
    const double o = horner(om, x);
    double m = 0;
    for (const auto& p : polys) m = std::max(m, std::abs(horner(p, x)));
    return m * m * std::pow(x, bd) * std::exp(-x) / (o * o);
  };
  double peak = 0;
  for (double x = 0.5; x < 200; x += 0.5) peak = std::max(peak, envelope(x));
  double tail = 30;
  while (tail < 2000 && envelope(tail) * tail > 1e-18 * peak) tail += 10;

  double h = 1.0;
  auto prev = gram(polys, om, b, tail, h);
  for (int it = 0; it < 6; ++it) {
    h /= 2;
    auto next = gram(polys, om, b, tail, h);
    double change = 0;
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < next.size(); ++j)
        change = std::max(change, std::abs(next[i][j] - prev[i][j]) / std::sqrt(next[i][i] * next[j][j]));
    prev = std::move(next);
    if (change < 1e-10) {
      res.worst = worst_off_diagonal(prev);
      return res;
    }
  }
  throw std::runtime_error("orthogonality_check: quadrature did not stabilize");
}

}  // namespace xlag
